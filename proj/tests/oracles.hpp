#pragma once

// Brute-force reference computations used only by the test suites. Nothing
// here calls the search routines it is meant to check.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "sbk/brace.hpp"
#include "sbk/enumeration.hpp"

namespace sbk::oracle {

using Flat = std::vector<Elem>;

inline Flat flat_of(const Table& t) {
  Flat f;
  for (const auto& r : t) f.insert(f.end(), r.begin(), r.end());
  return f;
}

/// Every group multiplication table on {0..n-1} with identity 0: normalized
/// Latin squares filled cell by cell, then filtered for associativity.
inline std::vector<Flat> group_tables(int n) {
  std::vector<Flat> out;
  Flat t(static_cast<std::size_t>(n * n), -1);
  for (int i = 0; i < n; ++i) {
    t[static_cast<std::size_t>(i)] = i;
    t[static_cast<std::size_t>(i * n)] = i;
  }
  auto at = [&](int i, int j) -> Elem& { return t[static_cast<std::size_t>(i * n + j)]; };
  auto associative = [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (at(at(a, b), c) != at(a, at(b, c))) return false;
    return true;
  };
  auto rec = [&](auto&& self, int cell) -> void {
    if (cell == n * n) {
      if (associative()) out.push_back(t);
      return;
    }
    const int i = cell / n, j = cell % n;
    if (i == 0 || j == 0) {
      self(self, cell + 1);
      return;
    }
    for (Elem v = 0; v < n; ++v) {
      bool clash = false;
      for (int k = 0; k < j && !clash; ++k) clash = at(i, k) == v;
      for (int k = 0; k < i && !clash; ++k) clash = at(k, j) == v;
      if (clash) continue;
      at(i, j) = v;
      self(self, cell + 1);
      at(i, j) = -1;
    }
  };
  if (n == 1) {
    out.push_back({0});
    return out;
  }
  rec(rec, 0);
  return out;
}

/// All permutations of {0..n-1} fixing 0.
inline std::vector<std::vector<Elem>> pointed_permutations(int n) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return out;
}

inline Flat relabel_flat(const Flat& t, int n, const std::vector<Elem>& p) {
  Flat out(t.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      out[static_cast<std::size_t>(p[static_cast<std::size_t>(a)] * n + p[static_cast<std::size_t>(b)])] =
          p[static_cast<std::size_t>(t[static_cast<std::size_t>(a * n + b)])];
  return out;
}

/// Least relabeling of a table (or table pair) over all bijections fixing 0.
inline Flat canonical(const std::vector<Flat>& tables, int n) {
  Flat best;
  for (const auto& p : pointed_permutations(n)) {
    Flat cand;
    for (const auto& t : tables) {
      const Flat r = relabel_flat(t, n, p);
      cand.insert(cand.end(), r.begin(), r.end());
    }
    if (best.empty() || cand < best) best = cand;
  }
  return best;
}

inline int group_count(int n) {
  std::set<Flat> classes;
  for (const auto& t : group_tables(n)) classes.insert(canonical({t}, n));
  return static_cast<int>(classes.size());
}

inline bool left_distributive(const Flat& add, const Flat& mul, int n) {
  auto ad = [&](int a, int b) { return add[static_cast<std::size_t>(a * n + b)]; };
  auto mu = [&](int a, int b) { return mul[static_cast<std::size_t>(a * n + b)]; };
  std::vector<int> neg(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (ad(a, b) == 0) neg[static_cast<std::size_t>(a)] = b;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mu(a, ad(b, c)) != ad(ad(mu(a, b), neg[static_cast<std::size_t>(a)]), mu(a, c))) return false;
  return true;
}

/// Skew braces of order n up to isomorphism: every pair of group tables
/// with identity 0 satisfying left distributivity, classed by exhaustive
/// relabeling.
inline int brace_count(int n) {
  const auto tables = group_tables(n);
  std::set<Flat> classes;
  for (const auto& add : tables)
    for (const auto& mul : tables)
      if (left_distributive(add, mul, n)) classes.insert(canonical({add, mul}, n));
  return static_cast<int>(classes.size());
}

inline bool closed(const FiniteGroup& g, ElementSet s) {
  if (!s.contains(0)) return false;
  for (Elem a : s.elements())
    for (Elem b : s.elements())
      if (!s.contains(g.op(a, b))) return false;
  return true;
}

/// Subsets containing 0 and closed under the operation (n <= ~12).
inline std::vector<ElementSet> subgroups(const FiniteGroup& g) {
  std::vector<ElementSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m)
    if (closed(g, ElementSet(m))) out.push_back(ElementSet(m));
  std::sort(out.begin(), out.end(), size_then_bits_less);
  return out;
}

/// All p-element subsets that are subgroups of both operations.
inline std::vector<ElementSet> p_subbraces(const SkewBrace& b, int p) {
  std::vector<ElementSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << b.order()); ++m) {
    const ElementSet s(m);
    if (s.size() == p && closed(b.add(), s) && closed(b.mul(), s)) out.push_back(s);
  }
  return out;
}

inline std::vector<GroupMap> automorphisms(const FiniteGroup& g) {
  std::vector<GroupMap> out;
  for (const auto& p : pointed_permutations(g.order())) {
    bool hom = true;
    for (Elem a = 0; a < g.order() && hom; ++a)
      for (Elem b = 0; b < g.order() && hom; ++b)
        hom = p[static_cast<std::size_t>(g.op(a, b))] == g.op(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]);
    if (hom) out.push_back(GroupMap{p});
  }
  return out;
}

/// Ideal characterization through the star product: a normal subgroup of
/// (B,+) with B * S and S * B inside S.
inline bool ideal_by_star(const SkewBrace& b, ElementSet s) {
  if (!closed(b.add(), s)) return false;
  for (Elem x = 0; x < b.order(); ++x)
    for (Elem y : s.elements()) {
      if (!s.contains(b.plus(b.plus(x, y), b.neg(x)))) return false;
      if (!s.contains(b.star(x, y)) || !s.contains(b.star(y, x))) return false;
    }
  return true;
}

/// K / J is an abelian brace: ab = a + b and a + b = b + a modulo J.
inline bool abelian_factor(const SkewBrace& b, ElementSet j, ElementSet k) {
  for (Elem x : k.elements())
    for (Elem y : k.elements()) {
      if (!j.contains(b.minus(b.times(x, y), b.plus(x, y)))) return false;
      if (!j.contains(b.minus(b.plus(x, y), b.plus(y, x)))) return false;
    }
  return true;
}

/// Depth-first search for a chain of ideals with abelian factors, given
/// the full ideal list.
inline bool soluble_by_chain_search(const SkewBrace& b, const std::vector<ElementSet>& all_ideals) {
  const ElementSet full = ElementSet::full(b.order());
  auto rec = [&](auto&& self, ElementSet current) -> bool {
    if (current == full) return true;
    for (ElementSet k : all_ideals)
      if (current.is_subset_of(k) && k != current && abelian_factor(b, current, k) && self(self, k)) return true;
    return false;
  };
  return rec(rec, ElementSet::singleton(0));
}

}  // namespace sbk::oracle
