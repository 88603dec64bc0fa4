#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "sbk/brace.hpp"
#include "sbk/enumeration.hpp"

namespace sbk::test {

inline FiniteGroup z(int n) { return cyclic_group(n); }
inline FiniteGroup klein() { return direct_product(cyclic_group(2), cyclic_group(2)); }
inline FiniteGroup s3() { return group_from_permutations(3, {{1, 0, 2}, {1, 2, 0}}); }
inline FiniteGroup q8() { return dicyclic_group(2); }

/// Catalog of order n, computed once per test binary.
inline const BraceCatalog& catalog(int n) {
  static std::mutex m;
  static std::map<int, BraceCatalog> cache;
  std::lock_guard lock(m);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, all_skew_braces(n)).first;
  return it->second;
}

/// Every catalogued brace of order 1..n_max.
inline std::vector<const SkewBrace*> braces_up_to(int n_max) {
  std::vector<const SkewBrace*> out;
  for (int n = 1; n <= n_max; ++n)
    for (const auto& e : catalog(n).entries) out.push_back(&e.brace);
  return out;
}

inline Table to_table(const FiniteGroup& g) { return g.rows(); }

}  // namespace sbk::test
