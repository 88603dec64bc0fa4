#include "sbk/cauchy.hpp"

#include <string>

#include "sbk/enumeration.hpp"
#include "sbk/parallel.hpp"
#include "sbk/substructure.hpp"

namespace sbk {

std::string_view to_string(WitnessStrategy s) {
  return s == WitnessStrategy::lambda_fixed_point ? "lambda_fixed_point" : "brute_force";
}

std::optional<SubbraceWitness> find_subbrace_witness(const SkewBrace& b, int p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime", {p});
  if (b.order() % p != 0)
    throw Error(ErrorKind::PrimeDoesNotDivideOrder, std::to_string(p) + " does not divide " + std::to_string(b.order()), {p});

  for (Elem x = 1; x < b.order(); ++x) {
    if (element_order(b.add(), x) != p) continue;
    const ElementSet cyc = cyclic_subgroup(b.add(), x);
    // lambda_x(x) = x makes <x>_+ a trivial subbrace.
    if (b.lambda(x, x) == x) return SubbraceWitness{cyc, x, WitnessStrategy::lambda_fixed_point};
    if (is_subgroup(b.mul(), cyc)) return SubbraceWitness{cyc, x, WitnessStrategy::brute_force};
  }
  return std::nullopt;
}

std::optional<ElementSet> find_subbrace_of_order(const SkewBrace& b, int p) {
  if (auto w = find_subbrace_witness(b, p)) return w->carrier;
  return std::nullopt;
}

CauchyReport cauchy_report(const SkewBrace& b) {
  CauchyReport r;
  for (int p : prime_divisors(b.order())) {
    PrimeEntry e{p, find_subbrace_witness(b, p)};
    if (!e.witness) r.all_primes_witnessed = false;
    r.entries.push_back(e);
  }
  return r;
}

std::optional<ElementSet> sylow_fixed_point_diagnostic(const SkewBrace& b, int p) {
  for (ElementSet sylow : sylow_p(b.add(), p)) {
    bool stable = true;
    for (Elem a = 0; a < b.order() && stable; ++a) {
      ElementSet image;
      sylow.for_each([&](Elem x) { image.insert(b.lambda(a, x)); });
      stable = image == sylow;
    }
    if (stable) return sylow;
  }
  return std::nullopt;
}

namespace {

SurveyRow survey_row(const SkewBrace& b, int iso_index, const std::string& group) {
  SurveyRow row;
  row.order = b.order();
  row.iso_index = iso_index;
  row.additive_group = group;
  row.flags = classify(b);
  const CauchyReport rep = cauchy_report(b);
  row.witnessed = rep.all_primes_witnessed;
  for (const auto& e : rep.entries)
    if (!e.witness) row.missing_primes.push_back(e.prime);
  return row;
}

}  // namespace

std::vector<SurveyRow> survey(int n_max, int workers) {
  std::vector<SurveyRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    const BraceCatalog cat = all_skew_braces(n, {workers, false});
    std::vector<SurveyRow> block(cat.entries.size());
    parallel_for(cat.entries.size(), workers, [&](std::size_t i) {
      const auto& e = cat.entries[i];
      block[i] = survey_row(e.brace, static_cast<int>(i), cat.groups[static_cast<std::size_t>(e.additive_group)]);
    });
    rows.insert(rows.end(), block.begin(), block.end());
  }
  return rows;
}

HarnessResult theorem_harness(TheoremClass theorem, int n_max, int workers) {
  HarnessResult result;
  result.theorem = theorem;
  result.n_max = n_max;
  for (int n = 1; n <= n_max; ++n) {
    const BraceCatalog cat = all_skew_braces(n, {workers, false});
    std::vector<std::optional<SurveyRow>> outcome(cat.entries.size());
    std::vector<char> in_class(cat.entries.size(), 0);
    parallel_for(cat.entries.size(), workers, [&](std::size_t i) {
      const SkewBrace& b = cat.entries[i].brace;
      const bool member = theorem == TheoremClass::two_sided ? is_two_sided(b) : is_bi_skew(b);
      if (!member) return;
      in_class[i] = 1;
      SurveyRow row = survey_row(b, static_cast<int>(i), cat.groups[static_cast<std::size_t>(cat.entries[i].additive_group)]);
      // Independent re-validation of each reported witness.
      for (int p : prime_divisors(n)) {
        const auto w = find_subbrace_of_order(b, p);
        if (w && (w->size() != p || !is_subbrace(b, *w))) {
          row.witnessed = false;
          row.missing_primes.push_back(p);
        }
      }
      if (!row.witnessed) outcome[i] = std::move(row);
    });
    for (std::size_t i = 0; i < cat.entries.size(); ++i) {
      if (!in_class[i]) continue;
      ++result.braces_checked;
      result.prime_checks += static_cast<int>(prime_divisors(n).size());
      if (outcome[i]) result.failures.push_back(*outcome[i]);
    }
  }
  return result;
}

}  // namespace sbk
