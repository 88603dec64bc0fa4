#pragma once

#include <optional>
#include <vector>

#include "sbk/brace.hpp"

namespace sbk {

struct Subbrace {
  ElementSet carrier;
  bool is_ideal = false;
  /// ab = a + b on the carrier.
  bool is_trivial_sub = false;
  /// Trivial on the carrier with commutative addition there.
  bool is_abelian_sub = false;
};

/// Subgroup of both (B,+) and (B,*).
bool is_subbrace(const SkewBrace& b, ElementSet s);
bool is_trivial_on(const SkewBrace& b, ElementSet s);
bool is_abelian_on(const SkewBrace& b, ElementSet s);

/// Every subbrace, ordered by size then mask.
std::vector<Subbrace> subbraces(const SkewBrace& b);

/// Subbrace, lambda-invariant, normal in both groups.
bool is_ideal(const SkewBrace& b, ElementSet s);
std::vector<ElementSet> ideals(const SkewBrace& b);
/// Nonzero ideals containing no smaller nonzero ideal.
std::vector<ElementSet> minimal_ideals(const SkewBrace& b);

struct QuotientBrace {
  /// Smallest index in each coset; coset k has representative reps[k].
  std::vector<Elem> reps;
  /// Element -> coset index.
  std::vector<Elem> projection;
  SkewBrace brace;
};

/// B / I on additive cosets ordered by representative. Throws NotAnIdeal.
QuotientBrace quotient(const SkewBrace& b, ElementSet ideal);

/// Additive subgroup generated by {x * y : x in xs, y in ys}.
ElementSet star_span(const SkewBrace& b, ElementSet xs, ElementSet ys);
/// B^2 = B * B.
ElementSet brace_square(const SkewBrace& b);
/// (B^op)^2, the square of the opposite brace.
ElementSet opposite_square(const SkewBrace& b);

ElementSet ker_lambda(const SkewBrace& b);

struct BraceCenters {
  ElementSet z_add;
  ElementSet z_mul;
  bool z_add_is_ideal = false;
  bool z_mul_is_ideal = false;
};
BraceCenters brace_centers(const SkewBrace& b);

/// Exactly two ideals; the order-1 brace is not simple.
bool is_simple(const SkewBrace& b);

/// Witness chain 0 = I_0 < ... < I_k = B of ideals with abelian factors,
/// or nullopt. For the order-1 brace the chain is [{0}].
std::optional<std::vector<ElementSet>> soluble_chain(const SkewBrace& b);

}  // namespace sbk
