// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <cstdio>
#include <algorithm>
#include <string>

#include "fixtures.hpp"
#include "identities.hpp"
#include "oracles.hpp"
#include "sbk/cauchy.hpp"
#include "sbk/io.hpp"
#include "sbk/parallel.hpp"
#include "sbk/substructure.hpp"
#include "sbk/ybe.hpp"

using namespace sbk;
using namespace sbk::test;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s %s (%s)\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  failures += !ok;
}

bool cauchy_class(bool (*member)(const SkewBrace&), int n_max, int& braces, int& checks) {
  bool ok = true;
  for (const SkewBrace* b : braces_up_to(n_max)) {
    if (!member(*b)) continue;
    ++braces;
    for (int p : prime_divisors(b->order())) {
      ++checks;
      const auto w = find_subbrace_of_order(*b, p);
      ok = ok && w && w->size() == p && oracle::closed(b->add(), *w) && oracle::closed(b->mul(), *w);
    }
  }
  return ok;
}

void theorem(const char* name, bool (*member)(const SkewBrace&), TheoremClass cls) {
  int braces = 0, checks = 0;
  bool ok = cauchy_class(member, 12, braces, checks);
  const HarnessResult h = theorem_harness(cls, 12);
  ok = ok && h.failures.empty() && h.braces_checked == braces && h.prime_checks == checks;
  report(name, ok, std::to_string(braces) + " braces, " + std::to_string(checks) + " prime checks");
}

void identity_suite() {
  int all = 0, two = 0, bi = 0;
  bool ok = true;
  for (const SkewBrace* b : braces_up_to(8)) {
    ++all;
    ok = ok && identity::left_negation(*b) && identity::star_over_sum(*b) && identity::star_of_negative(*b) &&
         identity::lambda_of_star(*b);
    if (is_two_sided(*b)) {
      ++two;
      ok = ok && identity::right_negation(*b) && identity::conjugation_additive(*b) && identity::product_of_sums(*b);
    }
    if (is_bi_skew(*b)) {
      ++bi;
      ok = ok && identity::bi_skew_lambda(*b);
    }
  }
  report("identity suite", ok,
         std::to_string(all) + " braces, " + std::to_string(two) + " two-sided, " + std::to_string(bi) + " bi-skew");
}

void lemma_suite() {
  int failed = 0;
  for (const SkewBrace* b : braces_up_to(8)) {
    const int n = b->order();
    if (!identity::lambda_fixed_points_give_trivial_subbraces(*b)) ++failed;
    const bool simple = is_simple(*b);
    const bool trivial_like = is_trivial(*b) || is_almost_trivial(*b);
    if (is_two_sided(*b)) {
      for (Elem a = 0; a < n; ++a)
        if (!is_subbrace(*b, centralizer(b->mul(), a))) ++failed;
      if (simple && !trivial_like) ++failed;
      const ElementSet i = brace_square(*b) & opposite_square(*b);
      if (!is_ideal(*b, star_span(*b, i, i))) ++failed;
    }
    if (is_bi_skew(*b)) {
      const ElementSet k = ker_lambda(*b);
      if (!opposite_square(*b).is_subset_of(k)) ++failed;
      if (!is_ideal(*b, k) || !is_almost_trivial(quotient(*b, k).brace)) ++failed;
      if (simple && !trivial_like) ++failed;
    }
  }
  report("lemma suite", failed == 0, std::to_string(failed) + " failures on orders 1..8");
}

void enumeration_oracle() {
  bool ok = true;
  std::string counts;
  for (int n = 1; n <= 6; ++n) {
    const int got = static_cast<int>(catalog(n).entries.size());
    ok = ok && got == oracle::brace_count(n);
    counts += (n > 1 ? "," : "") + std::to_string(got);
  }
  for (int p : {2, 3, 5, 7, 11}) ok = ok && catalog(p).entries.size() == 1;
  report("enumeration oracle", ok, "counts 1..6 = " + counts);
}

void structural_oracles() {
  bool ok = true;
  long subsets = 0;
  for (const SkewBrace* b : braces_up_to(6))
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << b->order()); ++m, ++subsets)
      ok = ok && is_ideal(*b, ElementSet(m)) == oracle::ideal_by_star(*b, ElementSet(m));
  for (int n = 1; n <= 8; ++n)
    for (const auto& g : groups_of_order(n)) ok = ok && subgroups(g.group) == oracle::subgroups(g.group);
  for (const SkewBrace* b : braces_up_to(8)) {
    ok = ok && subgroups(b->mul()) == oracle::subgroups(b->mul());
    for (int p : prime_divisors(b->order())) {
      const auto all = oracle::p_subbraces(*b, p);
      const auto w = find_subbrace_of_order(*b, p);
      ok = ok && w.has_value() == !all.empty() && (!w || std::find(all.begin(), all.end(), *w) != all.end());
    }
  }
  report("structural oracles", ok, std::to_string(subsets) + " subsets checked for ideals");
}

void ybe() {
  int count = 0;
  bool ok = true;
  for (const SkewBrace* b : braces_up_to(8)) {
    ++count;
    ok = ok && check_solution(to_solution(*b)).valid();
  }
  report("YBE solutions", ok, std::to_string(count) + " braces");
}

void determinism() {
  const std::string a = manifest_json(all_skew_braces(8, {1, true}), {}).dump(2);
  const std::string b = manifest_json(all_skew_braces(8, {default_workers(), true}), {}).dump(2);
  bool ok = a == b;
  const BraceCatalog x = all_skew_braces(8), y = all_skew_braces(8);
  for (std::size_t k = 0; ok && k < x.entries.size(); ++k)
    ok = brace_to_json(x.entries[k].brace).dump() == brace_to_json(y.entries[k].brace).dump();
  report("determinism", ok, "order 8 manifest, " + std::to_string(a.size()) + " bytes");
}

}  // namespace

int main() {
  try {
    theorem("two-sided Cauchy harness", is_two_sided, TheoremClass::two_sided);
    theorem("bi-skew Cauchy harness", is_bi_skew, TheoremClass::bi_skew);
    identity_suite();
    lemma_suite();
    enumeration_oracle();
    structural_oracles();
    ybe();
    determinism();
  } catch (const std::exception& e) {
    std::printf("FAIL unexpected error: %s\n", e.what());
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
