#include "sbk/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace sbk {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::NotLatinSquare: return "NotLatinSquare";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::IdentityMismatch: return "IdentityMismatch";
    case ErrorKind::LeftDistributivityFails: return "LeftDistributivityFails";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::PrimeDoesNotDivideOrder: return "PrimeDoesNotDivideOrder";
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::ConstructionFailed: return "ConstructionFailed";
    case ErrorKind::BraidRelationFails: return "BraidRelationFails";
  }
  return "Unknown";
}

FiniteGroup::FiniteGroup(int n, std::vector<Elem> table) : n_(n), table_(std::move(table)), inv_(static_cast<std::size_t>(n)) {
  for (Elem a = 0; a < n_; ++a) {
    for (Elem b = 0; b < n_; ++b) {
      if (op(a, b) == 0) {
        inv_[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
  }
}

Elem FiniteGroup::power(Elem a, int k) const {
  Elem r = 0;
  for (int i = 0; i < k; ++i) r = op(r, a);
  return r;
}

Table FiniteGroup::rows() const {
  Table t(static_cast<std::size_t>(n_));
  for (Elem a = 0; a < n_; ++a) t[static_cast<std::size_t>(a)].assign(row(a).begin(), row(a).end());
  return t;
}

FiniteGroup FiniteGroup::opposite() const {
  std::vector<Elem> t(table_.size());
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b) t[static_cast<std::size_t>(a * n_ + b)] = op(b, a);
  return FiniteGroup(n_, std::move(t));
}

FiniteGroup group_from_flat_unchecked(int n, std::vector<Elem> table) { return FiniteGroup(n, std::move(table)); }

bool GroupMap::is_identity() const {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<Elem>(i)) return false;
  return true;
}

GroupMap GroupMap::inverse() const {
  GroupMap r{std::vector<Elem>(perm.size())};
  for (std::size_t i = 0; i < perm.size(); ++i) r.perm[static_cast<std::size_t>(perm[i])] = static_cast<Elem>(i);
  return r;
}

GroupMap GroupMap::identity(int n) {
  GroupMap r{std::vector<Elem>(static_cast<std::size_t>(n))};
  std::iota(r.perm.begin(), r.perm.end(), 0);
  return r;
}

GroupMap compose(const GroupMap& f, const GroupMap& g) {
  GroupMap r{std::vector<Elem>(g.perm.size())};
  for (std::size_t i = 0; i < g.perm.size(); ++i) r.perm[i] = f(g.perm[i]);
  return r;
}

std::optional<Elem> find_identity(const Table& table) {
  const int n = static_cast<int>(table.size());
  for (Elem e = 0; e < n; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) return e;
  }
  return std::nullopt;
}

Table relabel(const Table& table, const std::vector<Elem>& perm) {
  Table out(table.size(), std::vector<Elem>(table.size()));
  for (std::size_t a = 0; a < table.size(); ++a)
    for (std::size_t b = 0; b < table.size(); ++b)
      out[static_cast<std::size_t>(perm[a])][static_cast<std::size_t>(perm[b])] = perm[static_cast<std::size_t>(table[a][b])];
  return out;
}

namespace {

std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

void check_shape(const Table& table) {
  const auto n = table.size();
  if (n == 0) throw Error(ErrorKind::BadInput, "empty table");
  if (n > static_cast<std::size_t>(kMaxOrder))
    throw Error(ErrorKind::OrderTooLarge, "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw Error(ErrorKind::BadInput, "row " + std::to_string(i) + " has wrong length", {static_cast<int>(i)});
    for (std::size_t j = 0; j < n; ++j)
      if (table[i][j] < 0 || static_cast<std::size_t>(table[i][j]) >= n)
        throw Error(ErrorKind::BadInput, "entry out of range at " + std::to_string(i) + "," + std::to_string(j),
                    {static_cast<int>(i), static_cast<int>(j)});
  }
}

}  // namespace

FiniteGroup make_group(const Table& input) {
  check_shape(input);
  const int n = static_cast<int>(input.size());
  const auto e = find_identity(input);
  if (!e) throw Error(ErrorKind::NoIdentity, "no two-sided identity element");

  std::vector<Elem> swap_id(static_cast<std::size_t>(n));
  std::iota(swap_id.begin(), swap_id.end(), 0);
  std::swap(swap_id[0], swap_id[static_cast<std::size_t>(*e)]);
  const Table t = *e == 0 ? input : relabel(input, swap_id);

  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem b = 0; b < n && !found; ++b) found = t[a][b] == 0 && t[b][a] == 0;
    if (!found) throw Error(ErrorKind::NoInverse, "element " + std::to_string(a) + " has no inverse", {a});
  }
  for (Elem a = 0; a < n; ++a) {
    ElementSet r, c;
    for (Elem b = 0; b < n; ++b) {
      r.insert(t[a][b]);
      c.insert(t[b][a]);
    }
    if (r.size() != n || c.size() != n)
      throw Error(ErrorKind::NotLatinSquare, "row or column " + std::to_string(a) + " is not a permutation", {a});
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]])
          throw Error(ErrorKind::NotAssociative, "associativity fails at " + triple(a, b, c), {a, b, c});

  std::vector<Elem> flat;
  flat.reserve(static_cast<std::size_t>(n * n));
  for (const auto& r : t) flat.insert(flat.end(), r.begin(), r.end());
  return FiniteGroup(n, std::move(flat));
}

int element_order(const FiniteGroup& g, Elem x) {
  int k = 1;
  for (Elem y = x; y != 0; y = g.op(y, x)) ++k;
  return k;
}

namespace {

ElementSet closure_from(const FiniteGroup& g, ElementSet start, const std::vector<Elem>& gens) {
  ElementSet seen = start;
  seen.insert(0);
  std::vector<Elem> queue = seen.elements();
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Elem s : gens) {
      const Elem y = g.op(queue[i], s);
      if (!seen.contains(y)) {
        seen.insert(y);
        queue.push_back(y);
      }
    }
  }
  return seen;
}

}  // namespace

ElementSet generated_subgroup(const FiniteGroup& g, ElementSet gens) { return closure_from(g, ElementSet::singleton(0), gens.elements()); }

ElementSet cyclic_subgroup(const FiniteGroup& g, Elem x) {
  ElementSet s = ElementSet::singleton(0);
  for (Elem y = x; y != 0; y = g.op(y, x)) s.insert(y);
  return s;
}

bool is_subgroup(const FiniteGroup& g, ElementSet s) {
  if (!s.contains(0)) return false;
  bool ok = true;
  s.for_each([&](Elem a) {
    s.for_each([&](Elem b) {
      if (ok && !s.contains(g.op(a, b))) ok = false;
    });
  });
  return ok;
}

bool is_normal(const FiniteGroup& g, ElementSet s) {
  if (!is_subgroup(g, s)) return false;
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    s.for_each([&](Elem a) {
      if (ok && !s.contains(g.conj(x, a))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

bool is_abelian(const FiniteGroup& g) {
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = a + 1; b < g.order(); ++b)
      if (g.op(a, b) != g.op(b, a)) return false;
  return true;
}

std::vector<ElementSet> subgroups(const FiniteGroup& g) {
  struct Node {
    ElementSet set;
    std::vector<Elem> gens;
  };
  std::vector<Elem> cyclic_gens;
  std::set<ElementSet> seen;
  std::vector<Node> nodes;
  for (Elem x = 0; x < g.order(); ++x) {
    const ElementSet c = cyclic_subgroup(g, x);
    if (seen.insert(c).second) {
      cyclic_gens.push_back(x);
      nodes.push_back({c, x == 0 ? std::vector<Elem>{} : std::vector<Elem>{x}});
    }
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (Elem c : cyclic_gens) {
      if (nodes[i].set.contains(c)) continue;
      std::vector<Elem> gens = nodes[i].gens;
      gens.push_back(c);
      const ElementSet joined = closure_from(g, nodes[i].set, gens);
      if (seen.insert(joined).second) nodes.push_back({joined, std::move(gens)});
    }
  }
  std::vector<ElementSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), size_then_bits_less);
  return out;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int p = 2; p <= n; ++p)
    if (n % p == 0 && is_prime(p)) out.push_back(p);
  return out;
}

std::vector<ElementSet> sylow_p(const FiniteGroup& g, int p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime", {p});
  if (g.order() % p != 0) return {};
  int pk = 1;
  while (g.order() % (pk * p) == 0) pk *= p;
  std::vector<ElementSet> out;
  for (ElementSet s : subgroups(g))
    if (s.size() == pk) out.push_back(s);
  return out;
}

ElementSet centralizer(const FiniteGroup& g, Elem x) {
  ElementSet s;
  for (Elem y = 0; y < g.order(); ++y)
    if (g.op(x, y) == g.op(y, x)) s.insert(y);
  return s;
}

ElementSet center(const FiniteGroup& g) {
  ElementSet s;
  for (Elem x = 0; x < g.order(); ++x)
    if (centralizer(g, x).size() == g.order()) s.insert(x);
  return s;
}

ElementSet commutator_subgroup(const FiniteGroup& g, ElementSet a, ElementSet b) {
  ElementSet comms;
  a.for_each([&](Elem x) {
    b.for_each([&](Elem y) { comms.insert(g.op(g.op(x, y), g.op(g.inv(x), g.inv(y)))); });
  });
  return generated_subgroup(g, comms);
}

ElementSet derived_subgroup(const FiniteGroup& g) {
  const ElementSet all = ElementSet::full(g.order());
  return commutator_subgroup(g, all, all);
}

CharacteristicSubgroups characteristic_subgroups(const FiniteGroup& g) { return {center(g), derived_subgroup(g)}; }

GroupProperties group_properties(const FiniteGroup& g) {
  GroupProperties props;
  props.abelian = is_abelian(g);
  const ElementSet all = ElementSet::full(g.order());

  // Upper central series: Z_{i+1} = {x : [x, h] in Z_i for all h}.
  ElementSet z = ElementSet::singleton(0);
  for (;;) {
    ElementSet next;
    for (Elem x = 0; x < g.order(); ++x) {
      bool ok = true;
      for (Elem h = 0; h < g.order() && ok; ++h) ok = z.contains(g.op(g.op(x, h), g.op(g.inv(x), g.inv(h))));
      if (ok) next.insert(x);
    }
    if (next == z) break;
    z = next;
  }
  props.nilpotent = z == all;

  ElementSet d = all;
  for (;;) {
    const ElementSet next = commutator_subgroup(g, d, d);
    if (next == d) break;
    d = next;
  }
  props.soluble = d == ElementSet::singleton(0);
  return props;
}

std::vector<Elem> greedy_generators(const FiniteGroup& g) {
  std::vector<Elem> gens;
  ElementSet closure = ElementSet::singleton(0);
  while (closure.size() < g.order()) {
    Elem best = -1;
    int best_order = 0;
    for (Elem x = 0; x < g.order(); ++x) {
      if (closure.contains(x)) continue;
      const int o = element_order(g, x);
      if (o > best_order) {
        best = x;
        best_order = o;
      }
    }
    gens.push_back(best);
    closure = closure_from(g, ElementSet::singleton(0), gens);
  }
  return gens;
}

bool extend_on_generators(const FiniteGroup& src, const FiniteGroup& dst, const std::vector<Elem>& gens,
                          const std::vector<Elem>& images, std::size_t count, std::vector<Elem>& map) {
  std::fill(map.begin(), map.end(), -1);
  ElementSet used = ElementSet::singleton(0);
  map[0] = 0;
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Elem x = queue[i];
    for (std::size_t k = 0; k < count; ++k) {
      const Elem y = src.op(x, gens[k]);
      const Elem img = dst.op(map[static_cast<std::size_t>(x)], images[k]);
      Elem& slot = map[static_cast<std::size_t>(y)];
      if (slot == -1) {
        if (used.contains(img)) return false;
        used.insert(img);
        slot = img;
        queue.push_back(y);
      } else if (slot != img) {
        return false;
      }
    }
  }
  return true;
}

namespace {

template <class OnFound>
void search_homomorphic_bijections(const FiniteGroup& src, const FiniteGroup& dst, OnFound&& on_found) {
  const std::vector<Elem> gens = greedy_generators(src);
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const int o = element_order(src, gens[k]);
    for (Elem y = 0; y < dst.order(); ++y)
      if (element_order(dst, y) == o) candidates[k].push_back(y);
  }
  std::vector<Elem> images(gens.size());
  std::vector<Elem> map(static_cast<std::size_t>(src.order()));
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == gens.size()) {
      stop = !on_found(GroupMap{map});
      return;
    }
    for (Elem c : candidates[depth]) {
      images[depth] = c;
      if (extend_on_generators(src, dst, gens, images, depth + 1, map)) self(self, depth + 1);
      if (stop) return;
    }
  };
  rec(rec, 0);
}

std::vector<int> order_statistics(const FiniteGroup& g) {
  std::vector<int> counts(static_cast<std::size_t>(g.order() + 1));
  for (Elem x = 0; x < g.order(); ++x) ++counts[static_cast<std::size_t>(element_order(g, x))];
  return counts;
}

}  // namespace

std::vector<GroupMap> automorphism_group(const FiniteGroup& g) {
  std::vector<GroupMap> out;
  search_homomorphic_bijections(g, g, [&](GroupMap f) {
    out.push_back(std::move(f));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& dst, const GroupMap& f) {
  if (f.size() != src.order()) return false;
  for (Elem a = 0; a < src.order(); ++a)
    for (Elem b = 0; b < src.order(); ++b)
      if (f(src.op(a, b)) != dst.op(f(a), f(b))) return false;
  return true;
}

bool is_automorphism(const FiniteGroup& g, const GroupMap& f) {
  if (f.size() != g.order() || f(0) != 0) return false;
  ElementSet image;
  for (Elem x : f.perm) image.insert(x);
  return image.size() == g.order() && is_homomorphism(g, g, f);
}

std::optional<GroupMap> is_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  if (g == h) return GroupMap::identity(g.order());
  if (g.order() != h.order() || order_statistics(g) != order_statistics(h)) return std::nullopt;
  std::optional<GroupMap> found;
  search_homomorphic_bijections(g, h, [&](GroupMap f) {
    found = std::move(f);
    return false;
  });
  return found;
}

}  // namespace sbk
