#include "taquin/json_io.hpp"

#include <fstream>

namespace taquin {

namespace {

std::string big_str(const BigInt& v) { return v.str(); }

}  // namespace

Json poset_to_json(const Poset& p) {
    Json j;
    j["n"] = p.size();
    Json covers = Json::array();
    for (auto [a, b] : p.covers()) covers.push_back(Json::array({a, b}));
    j["covers"] = std::move(covers);
    if (p.has_names()) {
        Json names = Json::array();
        for (int v = 0; v < p.size(); ++v) names.push_back(p.name(v));
        j["names"] = std::move(names);
    }
    return j;
}

Poset poset_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("covers"))
        throw std::invalid_argument("poset JSON requires fields 'n' and 'covers'");
    const int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> covers;
    for (const auto& pair : j.at("covers")) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("each cover must be a pair [a, b]");
        covers.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
    std::vector<std::string> names;
    if (j.contains("names"))
        for (const auto& name : j.at("names")) names.push_back(name.get<std::string>());
    return Poset::from_covers(n, std::move(covers), std::move(names));
}

Poset poset_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open poset file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("malformed poset file " + path + ": " + e.what());
    }
    return poset_from_json(j);
}

Json rational_to_json(const BigRat& r) {
    Json j;
    j["num"] = big_str(boost::multiprecision::numerator(r));
    j["den"] = big_str(boost::multiprecision::denominator(r));
    return j;
}

Json verdict_to_json(const Poset& p, const DCompletenessVerdict& verdict) {
    Json j;
    j["d_complete"] = verdict.is_d_complete;
    if (verdict.violation) {
        const auto& v = *verdict.violation;
        Json vj;
        vj["condition"] = v.condition;
        vj["k"] = v.k;
        vj["w"] = p.display_name(v.w);
        if (v.y) vj["y"] = p.display_name(*v.y);
        if (v.z) vj["z"] = p.display_name(*v.z);
        vj["detail"] = v.detail;
        j["violation"] = std::move(vj);
    } else {
        j["violation"] = nullptr;
    }
    return j;
}

Json hooks_to_json(const Poset& p, const HookAssignment& hooks) {
    Json table = Json::object();
    for (int v = 0; v < p.size(); ++v) table[p.display_name(v)] = hooks[v];
    Json j;
    j["hooks"] = std::move(table);
    return j;
}

Json series_to_json(const SeriesCoefficients& series) {
    Json coeffs = Json::array();
    for (const BigInt& a : series) coeffs.push_back(big_str(a));
    return coeffs;
}

Json distribution_report_to_json(const Poset& p, const DistributionReport& report) {
    Json j;
    j["ensemble"] = report.exhaustive ? "exhaustive" : "sampled";
    j["n"] = p.size();
    j["size"] = big_str(report.ensemble_size);
    if (!report.exhaustive) {
        j["samples"] = report.samples;
        j["seed"] = report.seed;
    }
    j["classes"] = report.classes.size();
    Json counts = Json::array();
    for (std::size_t i = 0; i < report.classes.size(); ++i) {
        Json entry;
        entry["labels"] = join_ints(report.classes[i]);
        entry["count"] = big_str(report.counts[i]);
        counts.push_back(std::move(entry));
    }
    j["counts"] = std::move(counts);
    if (report.exhaustive) {
        j["uniform"] = report.uniform;
        j["expected_per_class"] = rational_to_json(report.expected_per_class);
    } else {
        j["chi_square"] = report.chi_square;
        j["p_value"] = report.p_value;
    }
    return j;
}

Json stat_profile_to_json(const StatProfile& profile) {
    Json j;
    j["m"] = profile.m;
    j["n"] = profile.n;
    Json counts = Json::array();
    for (const BigInt& c : profile.counts) counts.push_back(big_str(c));
    j["counts"] = std::move(counts);
    j["total"] = big_str(profile.total());
    return j;
}

Json involution_report_to_json(const InvolutionReport& report) {
    Json j;
    j["m"] = report.m;
    j["n"] = report.n;
    j["total"] = big_str(report.total);
    j["exceptional"] = big_str(report.exceptional_found);
    j["expected_exceptional"] = big_str(report.expected_exceptional);
    j["involutive"] = report.involutive;
    j["type_inverting"] = report.type_inverting;
    j["exceptional_one_type"] = report.exceptional_one_type;
    if (report.exceptional_type != 0) j["exceptional_type"] = report.exceptional_type;
    j["count_matches"] = report.count_matches;
    j["bookkeeping_ok"] = report.bookkeeping_ok;
    j["sign_consistent"] = report.sign_consistent;
    j["pass"] = report.pass();
    if (!report.failures.empty()) j["failures"] = report.failures;
    return j;
}

Json expectation_report_to_json(const ExpectationReport& report) {
    Json j;
    j["shape"] = report.shape.to_string();
    j["f_shape"] = big_str(report.f_shape);
    j["f_inset"] = big_str(report.f_inset);
    if (!report.refined.empty()) {
        Json refined = Json::array();
        for (const BigInt& c : report.refined) refined.push_back(big_str(c));
        j["refined"] = std::move(refined);
    }
    j["expectation"] = rational_to_json(report.expectation);
    j["expectation_decimal"] = static_cast<double>(report.expectation);
    return j;
}

}  // namespace taquin
