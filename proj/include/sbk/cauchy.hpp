#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sbk/brace.hpp"

namespace sbk {

enum class WitnessStrategy {
  /// lambda_x(x) = x with x of additive order p.
  lambda_fixed_point,
  /// <x>_+ checked for multiplicative closure directly.
  brute_force,
};

std::string_view to_string(WitnessStrategy s);

struct SubbraceWitness {
  ElementSet carrier;
  Elem generator = 0;
  WitnessStrategy strategy = WitnessStrategy::lambda_fixed_point;
};

/// Subbrace of order p, generator = smallest index that works.
///
/// A subbrace S of prime order p has both groups cyclic of order p on the
/// same set, so S = <x>_+ for any nonzero x in S. Scanning every x of
/// additive order p and testing <x>_+ for multiplicative closure is
/// therefore a complete search.
/// Throws NotPrime or PrimeDoesNotDivideOrder.
std::optional<SubbraceWitness> find_subbrace_witness(const SkewBrace& b, int p);
std::optional<ElementSet> find_subbrace_of_order(const SkewBrace& b, int p);

struct PrimeEntry {
  int prime = 0;
  std::optional<SubbraceWitness> witness;
};

struct CauchyReport {
  std::vector<PrimeEntry> entries;  ///< one per prime divisor, ascending
  bool all_primes_witnessed = true;
};

CauchyReport cauchy_report(const SkewBrace& b);

/// A Sylow p-subgroup P of (B,+) with lambda_b(P) = P for every b, if one
/// exists. Multiplication permutes Syl_p(B,+) through lambda; ker lambda acts
/// trivially, so the fixed points under B and under B / ker lambda agree.
std::optional<ElementSet> sylow_fixed_point_diagnostic(const SkewBrace& b, int p);

struct SurveyRow {
  int order = 0;
  int iso_index = 0;
  std::string additive_group;
  BraceFlags flags;
  bool witnessed = false;
  /// Primes p | n without an order-p subbrace.
  std::vector<int> missing_primes;
};

/// Every catalogued brace of order 1..n_max with its flags and Cauchy
/// outcome, ordered by order then catalog index.
std::vector<SurveyRow> survey(int n_max, int workers = 1);

enum class TheoremClass { two_sided, bi_skew };

struct HarnessResult {
  TheoremClass theorem = TheoremClass::two_sided;
  int n_max = 0;
  int braces_checked = 0;
  /// Prime-divisor checks performed (sum over braces).
  int prime_checks = 0;
  /// Rows of the class with some prime unwitnessed; empty on success.
  std::vector<SurveyRow> failures;
};

/// Runs the Cauchy search on every two-sided (or bi-skew) catalogued brace
/// of order 1..n_max and re-validates each witness as a subbrace of exact
/// prime order.
HarnessResult theorem_harness(TheoremClass theorem, int n_max, int workers = 1);

}  // namespace sbk
