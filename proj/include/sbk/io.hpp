#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "sbk/brace.hpp"
#include "sbk/cauchy.hpp"
#include "sbk/enumeration.hpp"
#include "sbk/ybe.hpp"

namespace sbk {

using json = nlohmann::json;

/// {"order": n, "table": [[...]]}; the identity may sit anywhere.
FiniteGroup group_from_json(const json& j);
json group_to_json(const FiniteGroup& g);

/// {"order": n, "add": [[...]], "mul": [[...]]}.
SkewBrace brace_from_json(const json& j);
json brace_to_json(const SkewBrace& b);

/// Reads and validates a brace file. Malformed JSON and missing fields are
/// BadInput; table defects surface as the construction errors.
SkewBrace load_brace(const std::filesystem::path& path);
json read_json(const std::filesystem::path& path);

json set_to_json(ElementSet s);
json flags_to_json(const BraceFlags& f);

/// Flags, ideal lattice (bitmasks), centers, B^2, (B^op)^2, ker lambda,
/// simplicity and the solubility chain.
json analysis_report_json(const SkewBrace& b);
json cauchy_report_json(const CauchyReport& r);
json solution_to_json(const YbeMap& r, const SolutionCheck& check);

struct ManifestFilter {
  bool two_sided_only = false;
  bool bi_skew_only = false;
};

/// Catalog entries that pass the filter, in catalog order.
std::vector<std::size_t> filtered_entries(const BraceCatalog& cat, const ManifestFilter& filter);

/// {order, count, filter, per_additive_group, flag_census, files}.
json manifest_json(const BraceCatalog& cat, const ManifestFilter& filter);
std::string brace_file_name(int order, std::size_t index);

json survey_to_json(const std::vector<SurveyRow>& rows);

}  // namespace sbk
