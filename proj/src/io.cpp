#include "sbk/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "sbk/substructure.hpp"

namespace sbk {

namespace {

Table table_from_json(const json& j, const char* key, int order) {
  if (!j.contains(key) || !j[key].is_array()) throw Error(ErrorKind::BadInput, std::string("missing table \"") + key + "\"");
  const json& rows = j[key];
  if (static_cast<int>(rows.size()) != order) throw Error(ErrorKind::BadInput, std::string("\"") + key + "\" does not have order rows");
  Table t;
  for (const json& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != order)
      throw Error(ErrorKind::BadInput, std::string("\"") + key + "\" row has wrong length");
    std::vector<Elem> r;
    for (const json& v : row) {
      if (!v.is_number_integer()) throw Error(ErrorKind::BadInput, std::string("\"") + key + "\" entry is not an integer");
      r.push_back(v.get<Elem>());
    }
    t.push_back(std::move(r));
  }
  return t;
}

int order_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::BadInput, "expected a JSON object");
  if (!j.contains("order") || !j["order"].is_number_integer()) throw Error(ErrorKind::BadInput, "missing integer \"order\"");
  const int n = j["order"].get<int>();
  if (n < 1) throw Error(ErrorKind::BadInput, "order must be positive");
  if (n > kMaxOrder) throw Error(ErrorKind::OrderTooLarge, "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  return n;
}

}  // namespace

FiniteGroup group_from_json(const json& j) { return make_group(table_from_json(j, "table", order_from_json(j))); }

json group_to_json(const FiniteGroup& g) { return json{{"order", g.order()}, {"table", g.rows()}}; }

SkewBrace brace_from_json(const json& j) {
  const int n = order_from_json(j);
  return make_skew_brace(table_from_json(j, "add", n), table_from_json(j, "mul", n));
}

json brace_to_json(const SkewBrace& b) {
  return json{{"order", b.order()}, {"add", b.add().rows()}, {"mul", b.mul().rows()}};
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::BadInput, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::BadInput, path.string() + ": " + e.what());
  }
}

SkewBrace load_brace(const std::filesystem::path& path) { return brace_from_json(read_json(path)); }

json set_to_json(ElementSet s) { return s.elements(); }

json flags_to_json(const BraceFlags& f) {
  return json{{"trivial", f.trivial},
              {"almost_trivial", f.almost_trivial},
              {"abelian", f.abelian},
              {"two_sided", f.two_sided},
              {"bi_skew", f.bi_skew}};
}

json analysis_report_json(const SkewBrace& b) {
  json ideal_masks = json::array();
  for (ElementSet i : ideals(b)) ideal_masks.push_back(i.bits());
  const BraceCenters c = brace_centers(b);
  json chain = nullptr;
  if (const auto ch = soluble_chain(b)) {
    chain = json::array();
    for (ElementSet i : *ch) chain.push_back(set_to_json(i));
  }
  const GroupProperties pa = group_properties(b.add()), pm = group_properties(b.mul());
  auto props = [](const GroupProperties& p) {
    return json{{"abelian", p.abelian}, {"nilpotent", p.nilpotent}, {"soluble", p.soluble}};
  };
  return json{{"order", b.order()},
              {"flags", flags_to_json(classify(b))},
              {"additive_group", props(pa)},
              {"multiplicative_group", props(pm)},
              {"ideals", ideal_masks},
              {"simple", is_simple(b)},
              {"centers",
               {{"z_add", set_to_json(c.z_add)},
                {"z_mul", set_to_json(c.z_mul)},
                {"z_add_is_ideal", c.z_add_is_ideal},
                {"z_mul_is_ideal", c.z_mul_is_ideal}}},
              {"brace_square", set_to_json(brace_square(b))},
              {"opposite_square", set_to_json(opposite_square(b))},
              {"ker_lambda", set_to_json(ker_lambda(b))},
              {"soluble_chain", chain}};
}

json cauchy_report_json(const CauchyReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json row{{"prime", e.prime}};
    if (e.witness) {
      row["witness"] = set_to_json(e.witness->carrier);
      row["generator"] = e.witness->generator;
      row["strategy"] = std::string(to_string(e.witness->strategy));
    } else {
      row["witness"] = nullptr;
    }
    entries.push_back(std::move(row));
  }
  return json{{"primes", entries}, {"all_primes_witnessed", r.all_primes_witnessed}};
}

json solution_to_json(const YbeMap& r, const SolutionCheck& check) {
  json rows = json::array();
  for (Elem x = 0; x < r.size(); ++x) {
    json row = json::array();
    for (Elem y = 0; y < r.size(); ++y) {
      const auto [u, v] = r(x, y);
      row.push_back(json::array({u, v}));
    }
    rows.push_back(std::move(row));
  }
  json out{{"r", rows},
           {"braid", check.braid},
           {"left_nondegenerate", check.left_nondegenerate},
           {"right_nondegenerate", check.right_nondegenerate},
           {"valid", check.valid()}};
  if (check.braid_violation) out["braid_violation"] = *check.braid_violation;
  return out;
}

std::vector<std::size_t> filtered_entries(const BraceCatalog& cat, const ManifestFilter& filter) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cat.entries.size(); ++i) {
    const SkewBrace& b = cat.entries[i].brace;
    if (filter.two_sided_only && !is_two_sided(b)) continue;
    if (filter.bi_skew_only && !is_bi_skew(b)) continue;
    out.push_back(i);
  }
  return out;
}

std::string brace_file_name(int order, std::size_t index) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "brace_%02d_%03zu.json", order, index);
  return buf;
}

json manifest_json(const BraceCatalog& cat, const ManifestFilter& filter) {
  const auto selected = filtered_entries(cat, filter);
  std::vector<int> per_group(cat.groups.size());
  int trivial = 0, almost_trivial = 0, abelian = 0, two_sided = 0, bi_skew = 0;
  json files = json::array();
  for (std::size_t i : selected) {
    const auto& e = cat.entries[i];
    ++per_group[static_cast<std::size_t>(e.additive_group)];
    const BraceFlags f = classify(e.brace);
    trivial += f.trivial;
    almost_trivial += f.almost_trivial;
    abelian += f.abelian;
    two_sided += f.two_sided;
    bi_skew += f.bi_skew;
    files.push_back(json{{"file", brace_file_name(cat.order, i)},
                         {"iso_index", i},
                         {"additive_group", cat.groups[static_cast<std::size_t>(e.additive_group)]},
                         {"flags", flags_to_json(f)}});
  }
  json groups = json::array();
  for (std::size_t g = 0; g < cat.groups.size(); ++g) groups.push_back(json{{"group", cat.groups[g]}, {"count", per_group[g]}});
  return json{{"order", cat.order},
              {"count", selected.size()},
              {"catalog_size", cat.entries.size()},
              {"filter", {{"two_sided", filter.two_sided_only}, {"bi_skew", filter.bi_skew_only}}},
              {"per_additive_group", groups},
              {"flag_census",
               {{"trivial", trivial},
                {"almost_trivial", almost_trivial},
                {"abelian", abelian},
                {"two_sided", two_sided},
                {"bi_skew", bi_skew}}},
              {"files", files}};
}

json survey_to_json(const std::vector<SurveyRow>& rows) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back(json{{"order", r.order},
                       {"iso_index", r.iso_index},
                       {"additive_group", r.additive_group},
                       {"flags", flags_to_json(r.flags)},
                       {"witnessed", r.witnessed},
                       {"missing_primes", r.missing_primes}});
  return out;
}

}  // namespace sbk
