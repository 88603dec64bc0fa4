#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "sbk/brace.hpp"

namespace sbk {

/// A map r : X x X -> X x X on X = {0..n-1}, stored row-major.
class YbeMap {
 public:
  using Pair = std::pair<Elem, Elem>;

  YbeMap(int n, std::vector<Pair> values);

  int size() const { return n_; }
  Pair operator()(Elem x, Elem y) const { return r_[static_cast<std::size_t>(x * n_ + y)]; }
  const std::vector<Pair>& values() const { return r_; }

 private:
  int n_;
  std::vector<Pair> r_;
};

struct SolutionCheck {
  /// (r x id)(id x r)(r x id) = (id x r)(r x id)(id x r) on every triple.
  bool braid = false;
  /// y -> first component of r(x, y) bijective for every x.
  bool left_nondegenerate = false;
  /// x -> second component of r(x, y) bijective for every y.
  bool right_nondegenerate = false;
  std::optional<std::array<Elem, 3>> braid_violation;
  /// (slot, index): the x (slot 0) or y (slot 1) whose map is not bijective.
  std::optional<std::pair<int, Elem>> degenerate_at;

  bool nondegenerate() const { return left_nondegenerate && right_nondegenerate; }
  bool valid() const { return braid && nondegenerate(); }
};

SolutionCheck check_solution(const YbeMap& r);

/// r(x, y) = (lambda_x(y), lambda_x(y)^-1 x y), products and inverse taken
/// in (B,*). Throws BraidRelationFails if the result does not check out.
YbeMap to_solution(const SkewBrace& b);

}  // namespace sbk
