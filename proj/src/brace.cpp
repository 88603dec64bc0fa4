#include "sbk/brace.hpp"

#include <array>
#include <numeric>
#include <string>

namespace sbk {

SkewBrace::SkewBrace(FiniteGroup add, FiniteGroup mul)
    : add_(std::move(add)), mul_(std::move(mul)), lambda_(static_cast<std::size_t>(add_.order() * add_.order())) {
  const int n = order();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) lambda_[static_cast<std::size_t>(a * n + b)] = plus(neg(a), times(a, b));
}

std::optional<std::array<Elem, 3>> left_distributivity_violation(const FiniteGroup& add, const FiniteGroup& mul) {
  const int n = add.order();
  for (Elem a = 0; a < n; ++a) {
    const Elem neg_a = add.inv(a);
    for (Elem b = 0; b < n; ++b) {
      const Elem ab_minus_a = add.op(mul.op(a, b), neg_a);
      for (Elem c = 0; c < n; ++c)
        if (mul.op(a, add.op(b, c)) != add.op(ab_minus_a, mul.op(a, c))) return std::array<Elem, 3>{a, b, c};
    }
  }
  return std::nullopt;
}

SkewBrace make_skew_brace(FiniteGroup add, FiniteGroup mul) {
  if (add.order() != mul.order())
    throw Error(ErrorKind::BadInput, "additive and multiplicative orders differ");
  if (const auto v = left_distributivity_violation(add, mul)) {
    const auto [a, b, c] = *v;
    throw Error(ErrorKind::LeftDistributivityFails,
                "a(b+c) != ab-a+ac at (" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")",
                {a, b, c});
  }
  SkewBrace br(std::move(add), std::move(mul));
  // Left distributivity makes a -> lambda_a a homomorphism into Aut(B,+);
  // cheap enough to confirm on every construction.
  const int n = br.order();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (br.lambda(br.times(a, b), c) != br.lambda(a, br.lambda(b, c)))
          throw Error(ErrorKind::ConstructionFailed, "lambda is not a homomorphism", {a, b, c});
  return br;
}

SkewBrace make_skew_brace(const Table& add_table, const Table& mul_table) {
  if (add_table.size() != mul_table.size()) throw Error(ErrorKind::BadInput, "additive and multiplicative orders differ");
  // Identity discovery happens before the full group checks so a mismatch
  // is reported as such rather than as a downstream failure.
  const auto e_add = add_table.empty() ? std::nullopt : find_identity(add_table);
  const auto e_mul = mul_table.empty() ? std::nullopt : find_identity(mul_table);
  if (e_add && e_mul && *e_add != *e_mul)
    throw Error(ErrorKind::IdentityMismatch,
                "additive identity " + std::to_string(*e_add) + " != multiplicative identity " + std::to_string(*e_mul),
                {*e_add, *e_mul});
  FiniteGroup add = make_group(add_table);
  FiniteGroup mul = make_group(mul_table);
  return make_skew_brace(std::move(add), std::move(mul));
}

GroupMap lambda_of(const SkewBrace& b, Elem a) {
  const auto row = b.lambda_row(a);
  return GroupMap{std::vector<Elem>(row.begin(), row.end())};
}

Elem star(const SkewBrace& b, Elem x, Elem y) { return b.star(x, y); }

SkewBrace opposite(const SkewBrace& b) { return make_skew_brace(b.add().opposite(), b.mul()); }

std::optional<SkewBrace> swap(const SkewBrace& b) {
  if (left_distributivity_violation(b.mul(), b.add())) return std::nullopt;
  return make_skew_brace(b.mul(), b.add());
}

bool is_trivial(const SkewBrace& b) { return b.mul() == b.add(); }

bool is_almost_trivial(const SkewBrace& b) { return b.mul() == b.add().opposite(); }

bool is_two_sided(const SkewBrace& b) {
  const int n = b.order();
  for (Elem a = 0; a < n; ++a)
    for (Elem x = 0; x < n; ++x) {
      const Elem xa_minus_a = b.minus(b.times(x, a), a);
      for (Elem y = 0; y < n; ++y)
        if (b.times(b.plus(x, y), a) != b.plus(xa_minus_a, b.times(y, a))) return false;
    }
  return true;
}

bool is_bi_skew(const SkewBrace& b) { return !left_distributivity_violation(b.mul(), b.add()).has_value(); }

BraceFlags classify(const SkewBrace& b) {
  BraceFlags f;
  f.trivial = is_trivial(b);
  f.almost_trivial = is_almost_trivial(b);
  f.abelian = f.trivial && is_abelian(b.add());
  f.two_sided = is_two_sided(b);
  f.bi_skew = is_bi_skew(b);
  return f;
}

SkewBrace from_group(const FiniteGroup& g, BraceMode mode) {
  return make_skew_brace(g, mode == BraceMode::trivial ? g : g.opposite());
}

}  // namespace sbk
