#pragma once

// Element-wise identities of skew braces, evaluated on every tuple. Each
// returns true when the identity holds everywhere.

#include "sbk/brace.hpp"
#include "sbk/substructure.hpp"

namespace sbk::identity {

/// a(-b) = a - ab + a.
inline bool left_negation(const SkewBrace& b) {
  const int n = b.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (b.times(x, b.neg(y)) != b.plus(b.minus(x, b.times(x, y)), x)) return false;
  return true;
}

/// (-b)a = a - ba + a; needs distributivity on the right.
inline bool right_negation(const SkewBrace& b) {
  const int n = b.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (b.times(b.neg(y), x) != b.plus(b.minus(x, b.times(y, x)), x)) return false;
  return true;
}

/// a * (b + c) = a * b + b + a * c - b.
inline bool star_over_sum(const SkewBrace& b) {
  const int n = b.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (b.star(x, b.plus(y, z)) != b.minus(b.plus(b.plus(b.star(x, y), y), b.star(x, z)), y)) return false;
  return true;
}

/// a * (-b) = -b - a * b + b.
inline bool star_of_negative(const SkewBrace& b) {
  const int n = b.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (b.star(x, b.neg(y)) != b.plus(b.minus(b.neg(y), b.star(x, y)), y)) return false;
  return true;
}

/// lambda_a(b * c) = lambda_{aba^-1}(lambda_a(c)) - lambda_a(c) = (aba^-1) * lambda_a(c).
inline bool lambda_of_star(const SkewBrace& b) {
  const int n = b.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem conj = b.mul().conj(x, y);
      for (Elem z = 0; z < n; ++z) {
        const Elem lz = b.lambda(x, z);
        const Elem lhs = b.lambda(x, b.star(y, z));
        if (lhs != b.minus(b.lambda(conj, lz), lz) || lhs != b.star(conj, lz)) return false;
      }
    }
  return true;
}

/// a(b + c)a^-1 = aba^-1 + aca^-1.
inline bool conjugation_additive(const SkewBrace& b) {
  const int n = b.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (b.mul().conj(x, b.plus(y, z)) != b.plus(b.mul().conj(x, y), b.mul().conj(x, z))) return false;
  return true;
}

/// x *op y = -y + xy - x.
inline Elem opposite_star(const SkewBrace& b, Elem x, Elem y) { return b.minus(b.plus(b.neg(y), b.times(x, y)), x); }

/// (a + b)(c + d) = ac + (b *op c) + a * d + bd = ac + a * d + (b *op c) + bd.
inline bool product_of_sums(const SkewBrace& b) {
  const int n = b.order();
  for (Elem w = 0; w < n; ++w)
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z) {
          const Elem lhs = b.times(b.plus(w, x), b.plus(y, z));
          const Elem wy = b.times(w, y), xz = b.times(x, z);
          const Elem op = opposite_star(b, x, y), st = b.star(w, z);
          if (lhs != b.plus(b.plus(b.plus(wy, op), st), xz)) return false;
          if (lhs != b.plus(b.plus(b.plus(wy, st), op), xz)) return false;
        }
  return true;
}

/// lambda_{ba} = lambda_{a+b}, lambda_{lambda_a(b) a} = lambda_{ab}, lambda_a in Aut(B,*).
inline bool bi_skew_lambda(const SkewBrace& b) {
  const int n = b.order();
  auto same = [&](Elem u, Elem v) {
    for (Elem c = 0; c < n; ++c)
      if (b.lambda(u, c) != b.lambda(v, c)) return false;
    return true;
  };
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (!same(b.times(y, x), b.plus(x, y))) return false;
      if (!same(b.times(b.lambda(x, y), x), b.times(x, y))) return false;
      for (Elem z = 0; z < n; ++z)
        if (b.lambda(x, b.times(y, z)) != b.times(b.lambda(x, y), b.lambda(x, z))) return false;
    }
  return true;
}

/// lambda^op_a(b) = ab - a = a + lambda_a(b) - a, and *op agrees with the
/// star product of the opposite brace.
inline bool opposite_lambda(const SkewBrace& b) {
  const SkewBrace op = opposite(b);
  const int n = b.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem expected = b.minus(b.times(x, y), x);
      if (op.lambda(x, y) != expected) return false;
      if (expected != b.minus(b.plus(x, b.lambda(x, y)), x)) return false;
      if (op.star(x, y) != opposite_star(b, x, y)) return false;
    }
  return true;
}

/// Ring laws of (B, +, *) for two-sided braces with abelian addition.
inline bool radical_ring(const SkewBrace& b) {
  const int n = b.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        if (b.star(x, b.plus(y, z)) != b.plus(b.star(x, y), b.star(x, z))) return false;
        if (b.star(b.plus(x, y), z) != b.plus(b.star(x, z), b.star(y, z))) return false;
        if (b.star(b.star(x, y), z) != b.star(x, b.star(y, z))) return false;
      }
  return true;
}

/// Whenever lambda_x(x) = x, <x>_+ is a subbrace on which ab = a + b.
inline bool lambda_fixed_points_give_trivial_subbraces(const SkewBrace& b) {
  for (Elem x = 0; x < b.order(); ++x) {
    if (b.lambda(x, x) != x) continue;
    const ElementSet c = cyclic_subgroup(b.add(), x);
    if (!is_subbrace(b, c) || !is_trivial_on(b, c)) return false;
  }
  return true;
}

}  // namespace sbk::identity
