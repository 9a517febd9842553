#pragma once

#include <string>

#include <json.hpp>

#include "taquin/dcomplete.hpp"
#include "taquin/dtd_stats.hpp"
#include "taquin/involution.hpp"
#include "taquin/jdt.hpp"
#include "taquin/poset.hpp"
#include "taquin/tableaux.hpp"

namespace taquin {

using Json = nlohmann::ordered_json;

// Poset wire format: {"n": N, "covers": [[a,b],...], "names": [...]} with
// names optional. Large counts everywhere are serialized as decimal strings.
Json poset_to_json(const Poset& p);
Poset poset_from_json(const Json& j);
Poset poset_from_file(const std::string& path);

Json rational_to_json(const BigRat& r);  // {"num": "...", "den": "..."}

Json verdict_to_json(const Poset& p, const DCompletenessVerdict& verdict);
Json hooks_to_json(const Poset& p, const HookAssignment& hooks);
Json series_to_json(const SeriesCoefficients& series);
Json distribution_report_to_json(const Poset& p, const DistributionReport& report);
Json stat_profile_to_json(const StatProfile& profile);
Json involution_report_to_json(const InvolutionReport& report);
Json expectation_report_to_json(const ExpectationReport& report);

}  // namespace taquin
