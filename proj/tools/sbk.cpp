// sbk: command-line front end for the skew brace toolkit.
//
// Exit status: 0 success, 1 invalid input or validation failure,
// 2 a Cauchy failure on a two-sided or bi-skew brace.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sbk/cauchy.hpp"
#include "sbk/enumeration.hpp"
#include "sbk/io.hpp"
#include "sbk/parallel.hpp"
#include "sbk/substructure.hpp"
#include "sbk/ybe.hpp"

namespace {

using namespace sbk;

constexpr int kExitInvalid = 1;
constexpr int kExitTheoremViolation = 2;

std::string flag_string(const BraceFlags& f) {
  std::string s;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!s.empty()) s += ",";
    s += name;
  };
  add(f.trivial, "trivial");
  add(f.almost_trivial, "almost_trivial");
  add(f.abelian, "abelian");
  add(f.two_sided, "two_sided");
  add(f.bi_skew, "bi_skew");
  return s.empty() ? "-" : s;
}

std::string set_string(ElementSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Elem x) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  });
  return out + "}";
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_verify(const std::string& path, bool as_json) {
  const SkewBrace b = load_brace(path);
  const BraceFlags f = classify(b);
  if (as_json)
    print_json(json{{"valid", true}, {"order", b.order()}, {"flags", flags_to_json(f)}});
  else
    std::cout << "valid skew brace of order " << b.order() << "  flags: " << flag_string(f) << "\n";
  return 0;
}

int cmd_analyze(const std::string& path, bool as_json) {
  const SkewBrace b = load_brace(path);
  const json report = analysis_report_json(b);
  if (as_json) {
    print_json(report);
    return 0;
  }
  std::cout << "order            " << b.order() << "\n"
            << "flags            " << flag_string(classify(b)) << "\n"
            << "ideals           " << report["ideals"].size() << (is_simple(b) ? " (simple)" : "") << "\n"
            << "Z(B,+)           " << set_string(center(b.add())) << "\n"
            << "Z(B,*)           " << set_string(center(b.mul())) << "\n"
            << "B^2              " << set_string(brace_square(b)) << "\n"
            << "(B^op)^2         " << set_string(opposite_square(b)) << "\n"
            << "ker lambda       " << set_string(ker_lambda(b)) << "\n";
  if (const auto chain = soluble_chain(b)) {
    std::cout << "soluble chain   ";
    for (ElementSet i : *chain) std::cout << " " << set_string(i);
    std::cout << "\n";
  } else {
    std::cout << "soluble chain    none\n";
  }
  return 0;
}

int cmd_cauchy(const std::string& path, bool as_json) {
  const SkewBrace b = load_brace(path);
  const CauchyReport rep = cauchy_report(b);
  if (as_json) {
    print_json(cauchy_report_json(rep));
  } else {
    for (const auto& e : rep.entries) {
      std::cout << "p=" << e.prime << "  ";
      if (e.witness)
        std::cout << set_string(e.witness->carrier) << "  generator " << e.witness->generator << "  via "
                  << to_string(e.witness->strategy) << "\n";
      else
        std::cout << "no subbrace of order " << e.prime << "\n";
    }
    std::cout << (rep.all_primes_witnessed ? "all primes witnessed\n" : "some primes unwitnessed\n");
  }
  const BraceFlags f = classify(b);
  return !rep.all_primes_witnessed && (f.two_sided || f.bi_skew) ? kExitTheoremViolation : 0;
}

int cmd_enumerate(int n, const ManifestFilter& filter, const std::string& out_dir, int workers, bool as_json) {
  const BraceCatalog cat = all_skew_braces(n, {workers, true});
  const json manifest = manifest_json(cat, filter);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (std::size_t i : filtered_entries(cat, filter)) {
      std::ofstream f(std::filesystem::path(out_dir) / brace_file_name(n, i));
      f << brace_to_json(cat.entries[i].brace).dump() << "\n";
    }
    std::ofstream(std::filesystem::path(out_dir) / "manifest.json") << manifest.dump(2) << "\n";
  }
  if (as_json) {
    print_json(manifest);
    return 0;
  }
  std::cout << "order " << n << ": " << manifest["count"].get<int>() << " skew braces up to isomorphism\n";
  for (const auto& g : manifest["per_additive_group"])
    std::cout << "  " << std::left << std::setw(10) << g["group"].get<std::string>() << g["count"].get<int>() << "\n";
  std::cout << "  census    ";
  for (const auto& [k, v] : manifest["flag_census"].items()) std::cout << k << "=" << v.get<int>() << " ";
  std::cout << "\n";
  return 0;
}

int cmd_survey(int n_max, int workers, bool as_json) {
  const auto rows = survey(n_max, workers);
  bool violation = false;
  for (const auto& r : rows)
    if (!r.witnessed && (r.flags.two_sided || r.flags.bi_skew)) violation = true;
  if (as_json) {
    print_json(survey_to_json(rows));
  } else {
    std::cout << std::left << std::setw(7) << "order" << std::setw(6) << "iso" << std::setw(11) << "add" << std::setw(50)
              << "flags"
              << "witnessed\n";
    int open = 0;
    for (const auto& r : rows) {
      std::cout << std::setw(7) << r.order << std::setw(6) << r.iso_index << std::setw(11) << r.additive_group << std::setw(50)
                << flag_string(r.flags) << (r.witnessed ? "yes" : "NO") << "\n";
      if (!r.witnessed) ++open;
    }
    std::cout << rows.size() << " braces, " << open << " without a subbrace for some prime divisor";
    if (open > 0 && !violation) std::cout << " (outside the two-sided and bi-skew classes; open-question data)";
    std::cout << "\n";
  }
  return violation ? kExitTheoremViolation : 0;
}

int cmd_ybe(const std::string& path) {
  const SkewBrace b = load_brace(path);
  const YbeMap r = to_solution(b);
  print_json(solution_to_json(r, check_solution(r)));
  return 0;
}

int cmd_harness(bool two_sided, bool bi_skew, int n_max, int workers, bool as_json) {
  if (!two_sided && !bi_skew) two_sided = bi_skew = true;
  json results = json::array();
  bool ok = true;
  for (TheoremClass t : {TheoremClass::two_sided, TheoremClass::bi_skew}) {
    if ((t == TheoremClass::two_sided && !two_sided) || (t == TheoremClass::bi_skew && !bi_skew)) continue;
    const HarnessResult r = theorem_harness(t, n_max, workers);
    const char* name = t == TheoremClass::two_sided ? "two_sided" : "bi_skew";
    ok = ok && r.failures.empty();
    results.push_back(json{{"class", name},
                           {"n_max", n_max},
                           {"braces_checked", r.braces_checked},
                           {"prime_checks", r.prime_checks},
                           {"failures", survey_to_json(r.failures)}});
    if (!as_json) {
      std::cout << name << " braces of order <= " << n_max << ": " << r.braces_checked << " checked, " << r.prime_checks
                << " prime divisors, ";
      if (r.failures.empty())
        std::cout << "all primes witnessed\n";
      else
        std::cout << r.failures.size() << " FAILURES\n";
    }
  }
  if (as_json) print_json(results);
  return ok ? 0 : kExitTheoremViolation;
}

int check_order(int n) {
  const int cap = enumeration_cap();
  if (n < 1 || n > cap)
    throw Error(ErrorKind::UnsupportedOrder, "order " + std::to_string(n) + " outside 1.." + std::to_string(cap) +
                                                 " (SBK_MAX_ORDER raises the cap up to " +
                                                 std::to_string(kHardEnumerationCap) + ")");
  return n;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sbk: finite skew brace toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  int workers = default_workers();
  app.add_flag("--json", as_json, "Machine-readable JSON output");
  app.add_option("--workers", workers, "Worker threads (1 = serial reference run)")->check(CLI::PositiveNumber);

  std::string file;
  int order = 0;
  std::string out_dir;
  ManifestFilter filter;
  bool two_sided = false, bi_skew = false;

  auto file_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Brace JSON file")->required();
    sub->add_flag("--json", as_json, "Machine-readable JSON output");
    return sub;
  };
  auto* verify = file_command("verify", "Validate a brace file and print its flags");
  auto* analyze = file_command("analyze", "Ideals, centers, squares, ker lambda, solubility");
  auto* cauchy = file_command("cauchy", "Subbraces of every prime order dividing |B|");
  auto* ybe = file_command("ybe", "Yang-Baxter solution of a brace, with verification");

  auto* enumerate = app.add_subcommand("enumerate", "All skew braces of order n up to isomorphism");
  enumerate->add_option("n", order, "Order")->required();
  enumerate->add_flag("--two-sided", filter.two_sided_only, "Only two-sided braces");
  enumerate->add_flag("--bi-skew", filter.bi_skew_only, "Only bi-skew braces");
  enumerate->add_option("--out", out_dir, "Directory for brace files and manifest.json");
  enumerate->add_flag("--json", as_json, "Print the manifest as JSON");
  enumerate->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);

  auto* survey_cmd = app.add_subcommand("survey", "Cauchy property over every brace of order <= n_max");
  survey_cmd->add_option("n_max", order, "Largest order")->required();
  survey_cmd->add_flag("--json", as_json, "JSON rows");
  survey_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);

  auto* harness = app.add_subcommand("harness", "Cauchy check over two-sided and/or bi-skew braces");
  harness->add_option("n_max", order, "Largest order")->required();
  harness->add_flag("--two-sided", two_sided, "Two-sided braces only");
  harness->add_flag("--bi-skew", bi_skew, "Bi-skew braces only");
  harness->add_flag("--json", as_json, "JSON summary");
  harness->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*verify) return cmd_verify(file, as_json);
    if (*analyze) return cmd_analyze(file, as_json);
    if (*cauchy) return cmd_cauchy(file, as_json);
    if (*ybe) return cmd_ybe(file);
    if (*enumerate) return cmd_enumerate(check_order(order), filter, out_dir, workers, as_json);
    if (*survey_cmd) return cmd_survey(check_order(order), workers, as_json);
    if (*harness) return cmd_harness(two_sided, bi_skew, check_order(order), workers, as_json);
  } catch (const Error& e) {
    std::cerr << "sbk: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "sbk: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
