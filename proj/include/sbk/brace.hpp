#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "sbk/group.hpp"

namespace sbk {

/// A finite skew brace (B, +, *) on indices 0..n-1 with shared identity 0.
///
/// Construction checks a(b + c) = ab - a + ac on every triple and caches
/// the lambda action lambda_a(b) = -a + ab, row-major.
class SkewBrace {
 public:
  int order() const { return add_.order(); }
  const FiniteGroup& add() const { return add_; }
  const FiniteGroup& mul() const { return mul_; }

  Elem plus(Elem a, Elem b) const { return add_.op(a, b); }
  Elem neg(Elem a) const { return add_.inv(a); }
  /// a - b, i.e. a + (-b).
  Elem minus(Elem a, Elem b) const { return add_.op(a, add_.inv(b)); }
  Elem times(Elem a, Elem b) const { return mul_.op(a, b); }
  Elem mul_inv(Elem a) const { return mul_.inv(a); }

  Elem lambda(Elem a, Elem b) const { return lambda_[static_cast<std::size_t>(a * order() + b)]; }
  std::span<const Elem> lambda_row(Elem a) const {
    return std::span<const Elem>(lambda_).subspan(static_cast<std::size_t>(a * order()), static_cast<std::size_t>(order()));
  }
  /// a * b = -a + ab - b = lambda_a(b) - b.
  Elem star(Elem a, Elem b) const { return minus(lambda(a, b), b); }

  friend bool operator==(const SkewBrace& x, const SkewBrace& y) { return x.add_ == y.add_ && x.mul_ == y.mul_; }

 private:
  friend SkewBrace make_skew_brace(FiniteGroup add, FiniteGroup mul);
  SkewBrace(FiniteGroup add, FiniteGroup mul);

  FiniteGroup add_;
  FiniteGroup mul_;
  std::vector<Elem> lambda_;
};

/// Validates both tables, moves the shared identity to index 0, and checks
/// left distributivity on all triples. Throws the group errors,
/// IdentityMismatch, or LeftDistributivityFails (witness = first (a, b, c)).
SkewBrace make_skew_brace(const Table& add_table, const Table& mul_table);

/// Same check for groups already sharing identity 0.
SkewBrace make_skew_brace(FiniteGroup add, FiniteGroup mul);

/// First triple (a, b, c) with a(b + c) != ab - a + ac, if any.
std::optional<std::array<Elem, 3>> left_distributivity_violation(const FiniteGroup& add, const FiniteGroup& mul);

GroupMap lambda_of(const SkewBrace& b, Elem a);
Elem star(const SkewBrace& b, Elem x, Elem y);

/// Same multiplication, additive table transposed.
SkewBrace opposite(const SkewBrace& b);

/// (B, *, +) when it is again a skew brace; nullopt otherwise.
std::optional<SkewBrace> swap(const SkewBrace& b);

struct BraceFlags {
  bool trivial = false;
  bool almost_trivial = false;
  bool abelian = false;
  bool two_sided = false;
  bool bi_skew = false;

  friend bool operator==(const BraceFlags&, const BraceFlags&) = default;
};

bool is_trivial(const SkewBrace& b);
bool is_almost_trivial(const SkewBrace& b);
/// Mirrored distributivity (b + c)a = ba - a + ca on all triples.
bool is_two_sided(const SkewBrace& b);
bool is_bi_skew(const SkewBrace& b);
BraceFlags classify(const SkewBrace& b);

enum class BraceMode { trivial, almost_trivial };

/// mul = add (trivial) or mul(a, b) = add(b, a) (almost trivial).
SkewBrace from_group(const FiniteGroup& g, BraceMode mode);

}  // namespace sbk
