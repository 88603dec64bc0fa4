#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sbk/element_set.hpp"
#include "sbk/error.hpp"

namespace sbk {

/// Row-major Cayley table as read from input: table[i][j] = i * j.
using Table = std::vector<std::vector<Elem>>;

/// A finite group stored as its Cayley table, identity at index 0.
///
/// Instances only come out of make_group (or the trusted renumbering
/// helpers below), so every FiniteGroup satisfies the group axioms.
class FiniteGroup {
 public:
  int order() const { return n_; }
  Elem op(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a * n_ + b)]; }
  Elem inv(Elem a) const { return inv_[static_cast<std::size_t>(a)]; }
  std::span<const Elem> row(Elem a) const {
    return std::span<const Elem>(table_).subspan(static_cast<std::size_t>(a * n_), static_cast<std::size_t>(n_));
  }
  /// a^k for k >= 0.
  Elem power(Elem a, int k) const;
  /// Conjugate a * b * a^-1.
  Elem conj(Elem a, Elem b) const { return op(op(a, b), inv(a)); }

  const std::vector<Elem>& flat_table() const { return table_; }
  Table rows() const;
  /// Table of the opposite group, a *' b = b * a.
  FiniteGroup opposite() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.n_ == b.n_ && a.table_ == b.table_; }

 private:
  friend FiniteGroup make_group(const Table& table);
  friend FiniteGroup group_from_flat_unchecked(int n, std::vector<Elem> table);

  FiniteGroup(int n, std::vector<Elem> table);

  int n_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
};

/// A map between index sets; an automorphism when it is a bijection
/// respecting the table and fixing 0.
struct GroupMap {
  std::vector<Elem> perm;

  Elem operator()(Elem x) const { return perm[static_cast<std::size_t>(x)]; }
  int size() const { return static_cast<int>(perm.size()); }
  bool is_identity() const;
  GroupMap inverse() const;

  static GroupMap identity(int n);
  friend bool operator==(const GroupMap&, const GroupMap&) = default;
  friend auto operator<=>(const GroupMap&, const GroupMap&) = default;
};

/// (f o g)(x) = f(g(x)).
GroupMap compose(const GroupMap& f, const GroupMap& g);

/// Validates `table` and renumbers so the identity sits at index 0 (the
/// identity is swapped with whatever element was at 0).
/// Throws BadInput, OrderTooLarge, NoIdentity, NoInverse, NotLatinSquare,
/// NotAssociative.
FiniteGroup make_group(const Table& table);

/// Skips validation. For tables built by code that already guarantees the
/// axioms with identity 0 (generated groups, quotients).
FiniteGroup group_from_flat_unchecked(int n, std::vector<Elem> table);

/// Index of the two-sided identity of a square table, if any.
std::optional<Elem> find_identity(const Table& table);

/// Applies the relabeling x -> perm[x] to a table (perm a bijection).
Table relabel(const Table& table, const std::vector<Elem>& perm);

int element_order(const FiniteGroup& g, Elem x);

/// Smallest subgroup containing `gens`.
ElementSet generated_subgroup(const FiniteGroup& g, ElementSet gens);
ElementSet cyclic_subgroup(const FiniteGroup& g, Elem x);
bool is_subgroup(const FiniteGroup& g, ElementSet s);
bool is_normal(const FiniteGroup& g, ElementSet s);
bool is_abelian(const FiniteGroup& g);

/// All subgroups, sorted by size then mask. Joins cyclic subgroups until
/// the lattice stops growing.
std::vector<ElementSet> subgroups(const FiniteGroup& g);

/// Throws NotPrime. Empty iff p does not divide the order.
std::vector<ElementSet> sylow_p(const FiniteGroup& g, int p);

ElementSet centralizer(const FiniteGroup& g, Elem x);
ElementSet center(const FiniteGroup& g);
/// Subgroup generated by the commutators of elements of a and b.
ElementSet commutator_subgroup(const FiniteGroup& g, ElementSet a, ElementSet b);
ElementSet derived_subgroup(const FiniteGroup& g);

struct CharacteristicSubgroups {
  ElementSet center;
  ElementSet derived;
};
CharacteristicSubgroups characteristic_subgroups(const FiniteGroup& g);

struct GroupProperties {
  bool abelian = false;
  bool nilpotent = false;
  bool soluble = false;
};
GroupProperties group_properties(const FiniteGroup& g);

/// Greedy generating set: repeatedly the element of largest order outside
/// the closure so far, smallest index on ties.
std::vector<Elem> greedy_generators(const FiniteGroup& g);

/// Every automorphism, identity first. Enumerated by backtracking on the
/// images of greedy_generators; meant for small groups.
std::vector<GroupMap> automorphism_group(const FiniteGroup& g);

bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& dst, const GroupMap& f);
bool is_automorphism(const FiniteGroup& g, const GroupMap& f);

std::optional<GroupMap> is_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

/// Extends gens[k] -> images[k] (k < count) along right multiplication over
/// the subgroup those generators span, writing into `map` (-1 = unmapped).
/// False on an inconsistent or non-injective assignment.
bool extend_on_generators(const FiniteGroup& src, const FiniteGroup& dst, const std::vector<Elem>& gens,
                          const std::vector<Elem>& images, std::size_t count, std::vector<Elem>& map);

bool is_prime(int p);
std::vector<int> prime_divisors(int n);

}  // namespace sbk
