#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sbk/brace.hpp"

namespace sbk {

struct SmallGroup {
  std::string name;
  FiniteGroup group;
};

/// Default ceiling for catalog orders, and the ceiling nothing may exceed.
inline constexpr int kDefaultEnumerationCap = 12;
inline constexpr int kHardEnumerationCap = 15;

/// kDefaultEnumerationCap, or SBK_MAX_ORDER when set (clamped to the hard cap).
int enumeration_cap();

/// One representative per isomorphism class for 1 <= n <= 15, built from
/// cyclic, direct-product, dihedral, dicyclic and alternating
/// constructions. Throws UnsupportedOrder.
std::vector<SmallGroup> groups_of_order(int n);

/// Group from permutation generators on {0..degree-1}; elements are
/// numbered in discovery order from the identity.
FiniteGroup group_from_permutations(int degree, const std::vector<std::vector<Elem>>& gens);
FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
/// Dihedral group of order 2m.
FiniteGroup dihedral_group(int m);
/// Dicyclic group of order 4m (m = 2 gives Q8).
FiniteGroup dicyclic_group(int m);
FiniteGroup alternating_group_a4();

struct HolomorphElement {
  Elem shift = 0;
  int aut = 0;  ///< index into Holomorph::autos
  friend bool operator==(const HolomorphElement&, const HolomorphElement&) = default;
};

/// Hol(G) = G x| Aut(G), acting on G by x -> shift + aut(x).
class Holomorph {
 public:
  explicit Holomorph(FiniteGroup base);

  const FiniteGroup& base() const { return base_; }
  const std::vector<GroupMap>& autos() const { return autos_; }
  int aut_count() const { return static_cast<int>(autos_.size()); }
  int order() const { return base_.order() * aut_count(); }

  /// Index of autos[f] o autos[g].
  int compose(int f, int g) const { return compose_[static_cast<std::size_t>(f * aut_count() + g)]; }
  int aut_inverse(int f) const { return inverse_[static_cast<std::size_t>(f)]; }
  /// Index of f o g o f^-1.
  int conjugate(int f, int g) const { return compose(compose(f, g), aut_inverse(f)); }

  Elem apply(HolomorphElement h, Elem x) const { return base_.op(h.shift, autos_[static_cast<std::size_t>(h.aut)](x)); }
  /// (g, a)(h, b) = (g + a(h), a o b).
  HolomorphElement multiply(HolomorphElement x, HolomorphElement y) const {
    return {base_.op(x.shift, autos_[static_cast<std::size_t>(x.aut)](y.shift)), compose(x.aut, y.aut)};
  }
  std::vector<HolomorphElement> elements() const;
  std::vector<Elem> permutation(HolomorphElement h) const;

 private:
  FiniteGroup base_;
  std::vector<GroupMap> autos_;
  std::vector<int> compose_;
  std::vector<int> inverse_;
};

Holomorph holomorph(const FiniteGroup& g);

/// A regular subgroup {(a, lambda[a])} of Hol(G): exactly one element per
/// shift a, so it is determined by the automorphism index attached to each.
struct RegularSubgroup {
  std::vector<int> lambda;
  friend bool operator==(const RegularSubgroup&, const RegularSubgroup&) = default;
  friend auto operator<=>(const RegularSubgroup&, const RegularSubgroup&) = default;
};

/// Every regular subgroup, in lexicographic order of the lambda vectors.
std::vector<RegularSubgroup> regular_subgroups(const Holomorph& hol);

/// ab = a + lambda_a(b), so (B,*) is isomorphic to the regular subgroup.
/// Throws ConstructionFailed if the result fails validation.
SkewBrace brace_from_regular_subgroup(const Holomorph& hol, const RegularSubgroup& r);

/// Least lambda vector in the Aut(G)-conjugacy orbit of r.
RegularSubgroup canonical_regular_subgroup(const Holomorph& hol, const RegularSubgroup& r);

/// A bijection f with f(0) = 0 preserving both operations, or nullopt.
std::optional<std::vector<Elem>> are_isomorphic_braces(const SkewBrace& x, const SkewBrace& y);

struct CatalogEntry {
  SkewBrace brace;
  int additive_group = 0;  ///< index into BraceCatalog::groups
};

struct BraceCatalog {
  int order = 0;
  std::vector<std::string> groups;  ///< additive group names, groups_of_order order
  std::vector<CatalogEntry> entries;

  std::vector<int> per_group_counts() const;
};

struct EnumerationOptions {
  int workers = 1;
  /// Pairwise are_isomorphic_braces certification of the deduplicated catalog.
  bool certify = true;
};

/// Skew braces of order n up to isomorphism, ordered by additive group then
/// canonical lambda vector. Throws UnsupportedOrder beyond enumeration_cap().
BraceCatalog all_skew_braces(int n, const EnumerationOptions& options = {});

}  // namespace sbk
