#include "sbk/ybe.hpp"

#include <string>

namespace sbk {

YbeMap::YbeMap(int n, std::vector<Pair> values) : n_(n), r_(std::move(values)) {
  if (n < 1 || r_.size() != static_cast<std::size_t>(n * n)) throw Error(ErrorKind::BadInput, "solution table must be n x n");
  for (const auto& [u, v] : r_)
    if (u < 0 || u >= n || v < 0 || v >= n) throw Error(ErrorKind::BadInput, "solution entry out of range");
}

SolutionCheck check_solution(const YbeMap& r) {
  SolutionCheck out;
  const int n = r.size();

  out.braid = true;
  for (Elem x = 0; x < n && out.braid; ++x)
    for (Elem y = 0; y < n && out.braid; ++y)
      for (Elem z = 0; z < n && out.braid; ++z) {
        // left side: r12 r23 r12
        auto [a1, b1] = r(x, y);
        auto [b2, c2] = r(b1, z);
        auto [a3, b3] = r(a1, b2);
        // right side: r23 r12 r23
        auto [q1, s1] = r(y, z);
        auto [p2, q2] = r(x, q1);
        auto [q3, s3] = r(q2, s1);
        if (a3 != p2 || b3 != q3 || c2 != s3) {
          out.braid = false;
          out.braid_violation = std::array<Elem, 3>{x, y, z};
        }
      }

  out.left_nondegenerate = true;
  for (Elem x = 0; x < n && out.left_nondegenerate; ++x) {
    ElementSet seen;
    for (Elem y = 0; y < n; ++y) seen.insert(r(x, y).first);
    if (seen.size() != n) {
      out.left_nondegenerate = false;
      out.degenerate_at = std::pair<int, Elem>{0, x};
    }
  }
  out.right_nondegenerate = true;
  for (Elem y = 0; y < n && out.right_nondegenerate; ++y) {
    ElementSet seen;
    for (Elem x = 0; x < n; ++x) seen.insert(r(x, y).second);
    if (seen.size() != n) {
      out.right_nondegenerate = false;
      if (!out.degenerate_at) out.degenerate_at = std::pair<int, Elem>{1, y};
    }
  }
  return out;
}

YbeMap to_solution(const SkewBrace& b) {
  const int n = b.order();
  std::vector<YbeMap::Pair> values;
  values.reserve(static_cast<std::size_t>(n * n));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem u = b.lambda(x, y);
      values.emplace_back(u, b.times(b.mul_inv(u), b.times(x, y)));
    }
  YbeMap r(n, std::move(values));
  const SolutionCheck check = check_solution(r);
  if (!check.valid()) {
    std::vector<int> witness;
    if (check.braid_violation) witness.assign(check.braid_violation->begin(), check.braid_violation->end());
    throw Error(ErrorKind::BraidRelationFails, "brace solution failed verification", witness);
  }
  return r;
}

}  // namespace sbk
