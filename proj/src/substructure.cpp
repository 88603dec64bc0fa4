#include "sbk/substructure.hpp"

#include <algorithm>
#include <set>

namespace sbk {

bool is_subbrace(const SkewBrace& b, ElementSet s) { return is_subgroup(b.add(), s) && is_subgroup(b.mul(), s); }

bool is_trivial_on(const SkewBrace& b, ElementSet s) {
  bool ok = true;
  s.for_each([&](Elem x) {
    s.for_each([&](Elem y) {
      if (ok && b.times(x, y) != b.plus(x, y)) ok = false;
    });
  });
  return ok;
}

bool is_abelian_on(const SkewBrace& b, ElementSet s) {
  if (!is_trivial_on(b, s)) return false;
  bool ok = true;
  s.for_each([&](Elem x) {
    s.for_each([&](Elem y) {
      if (ok && b.plus(x, y) != b.plus(y, x)) ok = false;
    });
  });
  return ok;
}

namespace {

bool is_lambda_invariant(const SkewBrace& b, ElementSet s) {
  for (Elem a = 0; a < b.order(); ++a) {
    bool ok = true;
    s.for_each([&](Elem x) {
      if (ok && !s.contains(b.lambda(a, x))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

std::vector<ElementSet> common_subgroups(const SkewBrace& b) {
  const auto add_subs = subgroups(b.add());
  const auto mul_subs = subgroups(b.mul());
  const std::set<ElementSet> mul_set(mul_subs.begin(), mul_subs.end());
  std::vector<ElementSet> out;
  for (ElementSet s : add_subs)
    if (mul_set.count(s) != 0) out.push_back(s);
  return out;
}

}  // namespace

std::vector<Subbrace> subbraces(const SkewBrace& b) {
  std::vector<Subbrace> out;
  for (ElementSet s : common_subgroups(b)) {
    Subbrace sb;
    sb.carrier = s;
    sb.is_ideal = is_ideal(b, s);
    sb.is_trivial_sub = is_trivial_on(b, s);
    sb.is_abelian_sub = is_abelian_on(b, s);
    out.push_back(sb);
  }
  return out;
}

bool is_ideal(const SkewBrace& b, ElementSet s) {
  return is_subbrace(b, s) && is_lambda_invariant(b, s) && is_normal(b.add(), s) && is_normal(b.mul(), s);
}

std::vector<ElementSet> ideals(const SkewBrace& b) {
  std::vector<ElementSet> out;
  for (ElementSet s : common_subgroups(b))
    if (is_lambda_invariant(b, s) && is_normal(b.add(), s) && is_normal(b.mul(), s)) out.push_back(s);
  return out;
}

std::vector<ElementSet> minimal_ideals(const SkewBrace& b) {
  const auto all = ideals(b);
  const ElementSet zero = ElementSet::singleton(0);
  std::vector<ElementSet> out;
  for (ElementSet i : all) {
    if (i == zero) continue;
    const bool minimal = std::none_of(all.begin(), all.end(), [&](ElementSet j) {
      return j != zero && j != i && j.is_subset_of(i);
    });
    if (minimal) out.push_back(i);
  }
  return out;
}

QuotientBrace quotient(const SkewBrace& b, ElementSet ideal) {
  if (!is_ideal(b, ideal)) throw Error(ErrorKind::NotAnIdeal, "quotient requires an ideal");
  const int n = b.order();
  std::vector<Elem> projection(static_cast<std::size_t>(n), -1);
  std::vector<Elem> reps;
  for (Elem a = 0; a < n; ++a) {
    if (projection[static_cast<std::size_t>(a)] != -1) continue;
    const Elem k = static_cast<Elem>(reps.size());
    reps.push_back(a);
    ElementSet additive, multiplicative;
    ideal.for_each([&](Elem i) {
      additive.insert(b.plus(a, i));
      multiplicative.insert(b.times(a, i));
    });
    if (additive != multiplicative) throw Error(ErrorKind::ConstructionFailed, "a + I != aI", {a});
    additive.for_each([&](Elem x) { projection[static_cast<std::size_t>(x)] = k; });
  }
  const auto m = reps.size();
  Table add(m, std::vector<Elem>(m)), mul(m, std::vector<Elem>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      add[i][j] = projection[static_cast<std::size_t>(b.plus(reps[i], reps[j]))];
      mul[i][j] = projection[static_cast<std::size_t>(b.times(reps[i], reps[j]))];
    }
  return QuotientBrace{std::move(reps), std::move(projection), make_skew_brace(add, mul)};
}

ElementSet star_span(const SkewBrace& b, ElementSet xs, ElementSet ys) {
  ElementSet products;
  xs.for_each([&](Elem x) { ys.for_each([&](Elem y) { products.insert(b.star(x, y)); }); });
  return generated_subgroup(b.add(), products);
}

ElementSet brace_square(const SkewBrace& b) {
  const ElementSet all = ElementSet::full(b.order());
  return star_span(b, all, all);
}

ElementSet opposite_square(const SkewBrace& b) { return brace_square(opposite(b)); }

ElementSet ker_lambda(const SkewBrace& b) {
  ElementSet k;
  for (Elem a = 0; a < b.order(); ++a)
    if (lambda_of(b, a).is_identity()) k.insert(a);
  return k;
}

BraceCenters brace_centers(const SkewBrace& b) {
  BraceCenters c;
  c.z_add = center(b.add());
  c.z_mul = center(b.mul());
  c.z_add_is_ideal = is_ideal(b, c.z_add);
  c.z_mul_is_ideal = is_ideal(b, c.z_mul);
  return c;
}

bool is_simple(const SkewBrace& b) { return b.order() >= 2 && ideals(b).size() == 2; }

std::optional<std::vector<ElementSet>> soluble_chain(const SkewBrace& b) {
  const ElementSet zero = ElementSet::singleton(0);
  if (b.order() == 1) return std::vector<ElementSet>{zero};

  // Minimal ideals first: in a soluble brace they are already abelian.
  std::vector<ElementSet> candidates = minimal_ideals(b);
  for (ElementSet i : ideals(b))
    if (i != zero && std::find(candidates.begin(), candidates.end(), i) == candidates.end()) candidates.push_back(i);

  for (ElementSet i : candidates) {
    if (!is_abelian_on(b, i)) continue;
    const QuotientBrace q = quotient(b, i);
    auto upper = soluble_chain(q.brace);
    if (!upper) continue;
    std::vector<ElementSet> chain{zero};
    for (ElementSet j : *upper) {
      ElementSet preimage;
      for (Elem x = 0; x < b.order(); ++x)
        if (j.contains(q.projection[static_cast<std::size_t>(x)])) preimage.insert(x);
      chain.push_back(preimage);
    }
    return chain;
  }
  return std::nullopt;
}

}  // namespace sbk
