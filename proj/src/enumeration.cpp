#include "sbk/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "sbk/parallel.hpp"

namespace sbk {

int enumeration_cap() {
  const char* env = std::getenv("SBK_MAX_ORDER");
  if (env == nullptr || *env == '\0') return kDefaultEnumerationCap;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) return kDefaultEnumerationCap;
  return static_cast<int>(std::min<long>(v, kHardEnumerationCap));
}

FiniteGroup cyclic_group(int n) {
  std::vector<Elem> t(static_cast<std::size_t>(n * n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[static_cast<std::size_t>(a * n + b)] = (a + b) % n;
  return group_from_flat_unchecked(n, std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<Elem> t(static_cast<std::size_t>(n * n));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      t[static_cast<std::size_t>(x * n + y)] = a.op(x / nb, y / nb) * nb + b.op(x % nb, y % nb);
  return group_from_flat_unchecked(n, std::move(t));
}

FiniteGroup dihedral_group(int m) {
  // r^k s^e has code e*m + k; s r s = r^-1.
  const int n = 2 * m;
  std::vector<Elem> t(static_cast<std::size_t>(n * n));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const int e = x / m, k = x % m, f = y / m, l = y % m;
      const int rot = ((e == 0 ? k + l : k - l) % m + m) % m;
      t[static_cast<std::size_t>(x * n + y)] = ((e + f) % 2) * m + rot;
    }
  return group_from_flat_unchecked(n, std::move(t));
}

FiniteGroup dicyclic_group(int m) {
  // a^k x^e has code e*2m + k; a^{2m} = 1, x^2 = a^m, x a x^-1 = a^-1.
  const int h = 2 * m, n = 4 * m;
  std::vector<Elem> t(static_cast<std::size_t>(n * n));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const int e = x / h, k = x % h, f = y / h, l = y % h;
      int rot = 0, tail = 0;
      if (e == 0) {
        rot = k + l;
        tail = f;
      } else if (f == 0) {
        rot = k - l;
        tail = 1;
      } else {
        rot = k - l + m;
        tail = 0;
      }
      t[static_cast<std::size_t>(x * n + y)] = tail * h + ((rot % h) + h) % h;
    }
  return group_from_flat_unchecked(n, std::move(t));
}

FiniteGroup group_from_permutations(int degree, const std::vector<std::vector<Elem>>& gens) {
  std::vector<Elem> id(static_cast<std::size_t>(degree));
  for (Elem i = 0; i < degree; ++i) id[static_cast<std::size_t>(i)] = i;
  auto compose_perm = [](const std::vector<Elem>& p, const std::vector<Elem>& q) {
    std::vector<Elem> r(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[static_cast<std::size_t>(q[i])];
    return r;
  };
  std::vector<std::vector<Elem>> elems{id};
  std::map<std::vector<Elem>, Elem> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      auto q = compose_perm(elems[i], g);
      if (index.emplace(q, static_cast<Elem>(elems.size())).second) elems.push_back(std::move(q));
    }
  const int n = static_cast<int>(elems.size());
  if (n > kMaxOrder) throw Error(ErrorKind::OrderTooLarge, "generated group has order " + std::to_string(n));
  std::vector<Elem> t(static_cast<std::size_t>(n * n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      t[static_cast<std::size_t>(a * n + b)] = index.at(compose_perm(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)]));
  return group_from_flat_unchecked(n, std::move(t));
}

FiniteGroup alternating_group_a4() { return group_from_permutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}); }

std::vector<SmallGroup> groups_of_order(int n) {
  auto z = cyclic_group;
  switch (n) {
    case 1: return {{"1", z(1)}};
    case 4: return {{"Z4", z(4)}, {"Z2xZ2", direct_product(z(2), z(2))}};
    case 6: return {{"Z6", z(6)}, {"S3", dihedral_group(3)}};
    case 8:
      return {{"Z8", z(8)},
              {"Z4xZ2", direct_product(z(4), z(2))},
              {"Z2xZ2xZ2", direct_product(direct_product(z(2), z(2)), z(2))},
              {"D8", dihedral_group(4)},
              {"Q8", dicyclic_group(2)}};
    case 9: return {{"Z9", z(9)}, {"Z3xZ3", direct_product(z(3), z(3))}};
    case 10: return {{"Z10", z(10)}, {"D10", dihedral_group(5)}};
    case 12:
      return {{"Z12", z(12)},
              {"Z6xZ2", direct_product(z(6), z(2))},
              {"A4", alternating_group_a4()},
              {"D12", dihedral_group(6)},
              {"Dic12", dicyclic_group(3)}};
    case 14: return {{"Z14", z(14)}, {"D14", dihedral_group(7)}};
    case 2:
    case 3:
    case 5:
    case 7:
    case 11:
    case 13:
    case 15: return {{"Z" + std::to_string(n), z(n)}};
    default: throw Error(ErrorKind::UnsupportedOrder, "no group catalog for order " + std::to_string(n), {n});
  }
}

Holomorph::Holomorph(FiniteGroup base) : base_(std::move(base)), autos_(automorphism_group(base_)) {
  const int m = aut_count();
  std::map<std::vector<Elem>, int> index;
  for (int i = 0; i < m; ++i) index.emplace(autos_[static_cast<std::size_t>(i)].perm, i);
  compose_.resize(static_cast<std::size_t>(m * m));
  inverse_.resize(static_cast<std::size_t>(m));
  for (int f = 0; f < m; ++f) {
    for (int g = 0; g < m; ++g)
      compose_[static_cast<std::size_t>(f * m + g)] =
          index.at(sbk::compose(autos_[static_cast<std::size_t>(f)], autos_[static_cast<std::size_t>(g)]).perm);
    inverse_[static_cast<std::size_t>(f)] = index.at(autos_[static_cast<std::size_t>(f)].inverse().perm);
  }
}

std::vector<HolomorphElement> Holomorph::elements() const {
  std::vector<HolomorphElement> out;
  out.reserve(static_cast<std::size_t>(order()));
  for (Elem g = 0; g < base_.order(); ++g)
    for (int a = 0; a < aut_count(); ++a) out.push_back({g, a});
  return out;
}

std::vector<Elem> Holomorph::permutation(HolomorphElement h) const {
  std::vector<Elem> p(static_cast<std::size_t>(base_.order()));
  for (Elem x = 0; x < base_.order(); ++x) p[static_cast<std::size_t>(x)] = apply(h, x);
  return p;
}

Holomorph holomorph(const FiniteGroup& g) { return Holomorph(g); }

namespace {

/// Backtracking state for the regular-subgroup search: lambda[a] is the
/// automorphism paired with shift a, or -1 while undecided. The assigned
/// pairs are always closed under multiplication.
class RegularSearch {
 public:
  explicit RegularSearch(const Holomorph& hol)
      : hol_(hol), n_(hol.base().order()), lambda_(static_cast<std::size_t>(n_), -1), candidates_(static_cast<std::size_t>(n_)) {
    // (a, f) can only sit in a regular subgroup if its cyclic group acts
    // semiregularly: the first power returning 0 to 0 must be the identity.
    for (Elem a = 1; a < n_; ++a)
      for (int f = 0; f < hol.aut_count(); ++f) {
        HolomorphElement p{a, f};
        while (p.shift != 0) p = hol.multiply(p, {a, f});
        if (p.aut == 0) candidates_[static_cast<std::size_t>(a)].push_back(f);
      }
  }

  std::vector<RegularSubgroup> run() {
    lambda_[0] = 0;
    members_ = {0};
    recurse();
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void recurse() {
    const auto it = std::find(lambda_.begin(), lambda_.end(), -1);
    if (it == lambda_.end()) {
      found_.push_back({lambda_});
      return;
    }
    const Elem a = static_cast<Elem>(it - lambda_.begin());
    for (int f : candidates_[static_cast<std::size_t>(a)]) {
      const std::size_t mark = members_.size();
      if (add_and_close({a, f})) recurse();
      while (members_.size() > mark) {
        lambda_[static_cast<std::size_t>(members_.back())] = -1;
        members_.pop_back();
      }
    }
  }

  /// Inserts (a, f) and closes under products; false on a shift collision.
  bool add_and_close(HolomorphElement h) {
    std::vector<HolomorphElement> work;
    auto insert = [&](HolomorphElement x) {
      int& slot = lambda_[static_cast<std::size_t>(x.shift)];
      if (slot == -1) {
        slot = x.aut;
        members_.push_back(x.shift);
        work.push_back(x);
        return true;
      }
      return slot == x.aut;
    };
    if (!insert(h)) return false;
    while (!work.empty()) {
      const HolomorphElement x = work.back();
      work.pop_back();
      for (std::size_t i = 0; i < members_.size(); ++i) {
        const HolomorphElement m{members_[i], lambda_[static_cast<std::size_t>(members_[i])]};
        if (!insert(hol_.multiply(x, m)) || !insert(hol_.multiply(m, x))) return false;
      }
    }
    return true;
  }

  const Holomorph& hol_;
  int n_;
  std::vector<int> lambda_;
  std::vector<Elem> members_;
  std::vector<std::vector<int>> candidates_;
  std::vector<RegularSubgroup> found_;
};

}  // namespace

std::vector<RegularSubgroup> regular_subgroups(const Holomorph& hol) { return RegularSearch(hol).run(); }

SkewBrace brace_from_regular_subgroup(const Holomorph& hol, const RegularSubgroup& r) {
  const FiniteGroup& g = hol.base();
  const int n = g.order();
  Table mul(static_cast<std::size_t>(n), std::vector<Elem>(static_cast<std::size_t>(n)));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = g.op(a, hol.autos()[static_cast<std::size_t>(r.lambda[static_cast<std::size_t>(a)])](b));
  try {
    return make_skew_brace(g, make_group(mul));
  } catch (const Error& e) {
    throw Error(ErrorKind::ConstructionFailed, std::string("regular subgroup gave an invalid brace: ") + e.what());
  }
}

RegularSubgroup canonical_regular_subgroup(const Holomorph& hol, const RegularSubgroup& r) {
  RegularSubgroup best = r;
  RegularSubgroup image{std::vector<int>(r.lambda.size())};
  for (int f = 0; f < hol.aut_count(); ++f) {
    const GroupMap& phi = hol.autos()[static_cast<std::size_t>(f)];
    for (std::size_t a = 0; a < r.lambda.size(); ++a)
      image.lambda[static_cast<std::size_t>(phi(static_cast<Elem>(a)))] = hol.conjugate(f, r.lambda[a]);
    if (image < best) best = image;
  }
  return best;
}

namespace {

std::vector<std::pair<int, int>> order_pairs(const SkewBrace& b) {
  std::vector<std::pair<int, int>> out;
  for (Elem x = 0; x < b.order(); ++x) out.emplace_back(element_order(b.add(), x), element_order(b.mul(), x));
  return out;
}

}  // namespace

std::optional<std::vector<Elem>> are_isomorphic_braces(const SkewBrace& x, const SkewBrace& y) {
  if (x.order() != y.order()) return std::nullopt;
  const auto px = order_pairs(x), py = order_pairs(y);
  {
    auto sx = px, sy = py;
    std::sort(sx.begin(), sx.end());
    std::sort(sy.begin(), sy.end());
    if (sx != sy) return std::nullopt;
  }
  // An additive isomorphism is fixed by the images of additive generators;
  // each image must carry the same (additive, multiplicative) order pair.
  const std::vector<Elem> gens = greedy_generators(x.add());
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (Elem v = 0; v < y.order(); ++v)
      if (py[static_cast<std::size_t>(v)] == px[static_cast<std::size_t>(gens[k])]) candidates[k].push_back(v);

  const int n = x.order();
  std::vector<Elem> images(gens.size());
  std::vector<Elem> map(static_cast<std::size_t>(n));
  std::optional<std::vector<Elem>> found;
  auto preserves_mul = [&] {
    for (Elem a = 0; a < n; ++a) {
      if (px[static_cast<std::size_t>(a)] != py[static_cast<std::size_t>(map[static_cast<std::size_t>(a)])]) return false;
      for (Elem b = 0; b < n; ++b)
        if (map[static_cast<std::size_t>(x.times(a, b))] != y.times(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]))
          return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == gens.size()) {
      if (gens.empty()) map[0] = 0;
      if (preserves_mul()) found = map;
      return;
    }
    for (Elem c : candidates[depth]) {
      images[depth] = c;
      if (extend_on_generators(x.add(), y.add(), gens, images, depth + 1, map)) self(self, depth + 1);
      if (found) return;
    }
  };
  rec(rec, 0);
  return found;
}

std::vector<int> BraceCatalog::per_group_counts() const {
  std::vector<int> counts(groups.size());
  for (const auto& e : entries) ++counts[static_cast<std::size_t>(e.additive_group)];
  return counts;
}

BraceCatalog all_skew_braces(int n, const EnumerationOptions& options) {
  const int cap = enumeration_cap();
  if (n < 1 || n > cap)
    throw Error(ErrorKind::UnsupportedOrder, "order " + std::to_string(n) + " outside enumeration cap " + std::to_string(cap), {n});

  const auto groups = groups_of_order(n);
  std::vector<std::vector<SkewBrace>> per_group(groups.size());
  parallel_for(groups.size(), options.workers, [&](std::size_t gi) {
    const Holomorph hol(groups[gi].group);
    // Conjugation by Aut(G) inside Hol(G) is exactly brace isomorphism
    // between braces sharing the additive group G, so orbit
    // representatives are the isomorphism classes for this G.
    std::set<RegularSubgroup> classes;
    for (const auto& r : regular_subgroups(hol)) classes.insert(canonical_regular_subgroup(hol, r));
    for (const auto& r : classes) per_group[gi].push_back(brace_from_regular_subgroup(hol, r));
  });

  BraceCatalog cat;
  cat.order = n;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    cat.groups.push_back(groups[gi].name);
    for (auto& b : per_group[gi]) cat.entries.push_back({std::move(b), static_cast<int>(gi)});
  }

  if (options.certify) {
    const auto& es = cat.entries;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < es.size(); ++i)
      for (std::size_t j = i + 1; j < es.size(); ++j)
        if (es[i].additive_group == es[j].additive_group) pairs.emplace_back(i, j);
    parallel_for(pairs.size(), options.workers, [&](std::size_t k) {
      const auto [i, j] = pairs[k];
      if (are_isomorphic_braces(es[i].brace, es[j].brace))
        throw Error(ErrorKind::ConstructionFailed,
                    "catalog entries " + std::to_string(i) + " and " + std::to_string(j) + " are isomorphic",
                    {static_cast<int>(i), static_cast<int>(j)});
    });
  }
  return cat;
}

}  // namespace sbk
