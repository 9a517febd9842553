// Command-line front end: poset inspection, d-completeness and hooks, the
// taquin sort and its censuses, the double-tailed diamond statistics, the
// involution harness, tableau counting and expectations, and the full
// verification suite. Everything reports JSON (or CSV/pretty) on stdout.
//
// Exit codes: 0 success, 1 a verification found a mismatch, 2 usage error.

#include <cstdio>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "taquin/acceptance.hpp"
#include "taquin/json_io.hpp"

using namespace taquin;

namespace {

enum class Format { json, pretty, csv };

Format parse_format(const std::string& name) {
    if (name == "json") return Format::json;
    if (name == "pretty") return Format::pretty;
    if (name == "csv") return Format::csv;
    throw CLI::ValidationError("--format must be json, pretty or csv");
}

void emit(const Json& j, Format format) {
    if (format == Format::pretty)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

// A poset picked by family flags or loaded from a file; exactly one source.
struct PosetSource {
    std::string young_shape, shifted_shape, inset_spec, file, dtd;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--young", young_shape, "Young diagram poset, e.g. 3,3,2,1");
        cmd->add_option("--shifted", shifted_shape, "shifted diagram poset (strict shape)");
        cmd->add_option("--dtd", dtd, "double-tailed diamond as M,N, e.g. --dtd 6,5");
        cmd->add_option("--inset", inset_spec, "inset poset as K:shape, e.g. 4:3,2,2,1");
        cmd->add_option("--file", file, "poset JSON file {\"n\":..,\"covers\":[[a,b],..]}");
    }

    int sources() const {
        return !young_shape.empty() + !shifted_shape.empty() + !inset_spec.empty() +
               !file.empty() + !dtd.empty();
    }

    Poset build() const {
        if (sources() != 1)
            throw CLI::ValidationError("pick exactly one poset source "
                                       "(--young/--shifted/--dtd/--inset/--file)");
        if (!young_shape.empty()) return young(Partition::parse(young_shape));
        if (!shifted_shape.empty()) return shifted_young(Partition::parse(shifted_shape));
        if (!dtd.empty()) {
            const auto mn = parse_int_list(dtd);
            if (mn.size() != 2) throw CLI::ValidationError("--dtd expects M,N, e.g. 6,5");
            return double_tailed_diamond(mn[0], mn[1]);
        }
        if (!inset_spec.empty()) {
            const auto colon = inset_spec.find(':');
            if (colon == std::string::npos)
                throw CLI::ValidationError("--inset expects K:shape, e.g. 4:3,2,2,1");
            const int k = std::stoi(inset_spec.substr(0, colon));
            return inset(k, Partition::parse(inset_spec.substr(colon + 1)));
        }
        return poset_from_file(file);
    }

    // The natural processing order for the chosen family.
    std::string default_order() const {
        if (!young_shape.empty()) return "column";
        if (!shifted_shape.empty() || !inset_spec.empty()) return "row";
        if (!dtd.empty()) return "dtd";
        return "";
    }
};

ProcessingOrder build_order(const Poset& p, const std::string& selector) {
    if (selector == "column") return order_column_wise(p);
    if (selector == "row") return order_row_wise(p);
    if (selector == "dtd") return order_dtd(p);
    if (selector.empty())
        throw CLI::ValidationError("--order is required for file posets "
                                   "(column, row, dtd, or explicit values 1,3,2,...)");
    ProcessingOrder sigma = parse_int_list(selector);
    if (!is_linear_extension(p, sigma))
        throw std::invalid_argument("explicit --order is not a linear extension of the poset");
    return sigma;
}

int default_jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_pass(bool ok, const std::string& what) {
    if (!ok) throw VerificationFailure(what);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"jeu de taquin on posets: d-complete recognition, hook lengths, "
                 "distribution censuses, permutation statistics and tableau expectations"};
    app.require_subcommand(1);

    std::string format_name = "json";
    app.add_option("--format", format_name, "output format: json, pretty or csv")
        ->capture_default_str();

    // poset show | check
    auto* poset_cmd = app.add_subcommand("poset", "build and inspect posets");
    poset_cmd->require_subcommand(1);
    PosetSource poset_source;
    auto* poset_show = poset_cmd->add_subcommand("show", "print the poset as JSON");
    auto* poset_check = poset_cmd->add_subcommand("check", "validate and summarize a poset");
    poset_source.add_options(poset_show);
    poset_source.add_options(poset_check);

    // dcomplete check | hooks | count | series
    auto* dc_cmd = app.add_subcommand("dcomplete", "d-completeness, hooks and counting");
    dc_cmd->require_subcommand(1);
    PosetSource dc_source;
    int max_degree = 12;
    bool dc_brute = false;
    auto* dc_check = dc_cmd->add_subcommand("check", "decide d-completeness, with witnesses");
    auto* dc_hooks = dc_cmd->add_subcommand("hooks", "hook lengths of a d-complete poset");
    auto* dc_count = dc_cmd->add_subcommand("count", "linear-extension count via hooks");
    auto* dc_series = dc_cmd->add_subcommand("series", "coefficients of prod 1/(1-x^h)");
    for (auto* cmd : {dc_check, dc_hooks, dc_count, dc_series}) dc_source.add_options(cmd);
    dc_series->add_option("--max-degree", max_degree, "series truncation degree")
        ->capture_default_str();
    dc_series->add_flag("--brute", dc_brute, "compare against exhaustive order-reversing maps");
    dc_count->add_flag("--brute", dc_brute, "compare against extension enumeration");

    // jdt run | census
    auto* jdt_cmd = app.add_subcommand("jdt", "the sorting procedure and its censuses");
    jdt_cmd->require_subcommand(1);
    PosetSource jdt_source;
    std::string order_spec, pi_spec;
    bool with_trace = false, exhaustive = false;
    std::uint64_t samples = 0, seed = 0;
    int max_exhaustive_n = 11, jobs = default_jobs();
    auto* jdt_run = jdt_cmd->add_subcommand("run", "sort one labeling");
    auto* jdt_census = jdt_cmd->add_subcommand("census", "distribution over all or sampled inputs");
    for (auto* cmd : {jdt_run, jdt_census}) {
        jdt_source.add_options(cmd);
        cmd->add_option("--order", order_spec,
                        "processing order: column, row, dtd, or explicit values");
    }
    jdt_run->add_option("--pi", pi_spec, "input permutation, assigned in reverse order")
        ->required();
    jdt_run->add_flag("--trace", with_trace, "include the swap trace");
    jdt_census->add_flag("--exhaustive", exhaustive, "run all n! labelings");
    auto* samples_opt =
        jdt_census->add_option("--samples", samples, "sampled census with this many runs");
    jdt_census->add_option("--seed", seed, "RNG seed (required with --samples)");
    samples_opt->needs(jdt_census->get_option("--seed"));
    jdt_census->add_option("--max-n", max_exhaustive_n, "exhaustive census guard")
        ->capture_default_str();
    jdt_census->add_option("--jobs", jobs, "worker threads for exhaustive censuses");
    jdt_census->footer("csv columns: labels,count");

    // dtd stats | theorem
    auto* dtd_cmd = app.add_subcommand("dtd", "double-tailed diamond statistics");
    dtd_cmd->require_subcommand(1);
    int stat_m = 0, stat_n = 0;
    bool dtd_brute = false, dtd_verify = false;
    int dtd_jobs = default_jobs();
    auto* dtd_stats = dtd_cmd->add_subcommand("stats", "distribution of the prefix statistic");
    auto* dtd_theorem = dtd_cmd->add_subcommand("theorem", "signed difference s1 - s2");
    for (auto* cmd : {dtd_stats, dtd_theorem}) {
        cmd->add_option("--m", stat_m)->required();
        cmd->add_option("--n", stat_n)->required();
        cmd->add_option("--jobs", dtd_jobs, "worker threads for brute force");
    }
    dtd_stats->add_flag("--brute", dtd_brute, "compare against the exhaustive census");
    dtd_stats->footer("csv columns: k,count");
    dtd_theorem->add_flag("--verify", dtd_verify, "compare against exhaustive sorting");

    // phi apply | verify
    auto* phi_cmd = app.add_subcommand("phi", "the type-inverting involution");
    phi_cmd->require_subcommand(1);
    int phi_m = 0, phi_n = 0, phi_jobs = default_jobs(), phi_max = 8;
    std::string phi_pi;
    auto* phi_apply = phi_cmd->add_subcommand("apply", "apply the involution to one permutation");
    auto* phi_verify = phi_cmd->add_subcommand("verify", "exhaustive involution checks");
    for (auto* cmd : {phi_apply, phi_verify}) {
        cmd->add_option("--m", phi_m)->required();
        cmd->add_option("--n", phi_n)->required();
    }
    phi_apply->add_option("--pi", phi_pi, "one-line permutation, e.g. 2,5,6,3,1,7,4,8")->required();
    phi_verify->add_option("--jobs", phi_jobs, "worker threads");
    phi_verify->add_option("--max-size", phi_max, "guard on m+n")->capture_default_str();

    // syt count | expect
    auto* syt_cmd = app.add_subcommand("syt", "standard Young tableaux");
    syt_cmd->require_subcommand(1);
    std::string syt_shape;
    bool syt_brute = false, syt_refined = false;
    auto* syt_count = syt_cmd->add_subcommand("count", "number of standard tableaux");
    auto* syt_expect = syt_cmd->add_subcommand("expect", "expected second-row leader");
    for (auto* cmd : {syt_count, syt_expect}) {
        cmd->add_option("--shape", syt_shape, "partition, e.g. 3,3,2,1")->required();
        cmd->add_flag("--brute", syt_brute, "compare against enumeration");
    }
    syt_expect->add_flag("--refined", syt_refined, "include refined inset counts");

    // inset count
    auto* inset_cmd = app.add_subcommand("inset", "inset posets");
    inset_cmd->require_subcommand(1);
    int inset_k = 0;
    std::string inset_shape;
    bool inset_brute = false;
    auto* inset_count_cmd = inset_cmd->add_subcommand("count", "standard fillings of an inset");
    inset_count_cmd->add_option("--k", inset_k)->required();
    inset_count_cmd->add_option("--shape", inset_shape)->required();
    inset_count_cmd->add_flag("--brute", inset_brute, "compare against extension enumeration");

    // families check
    auto* families_cmd = app.add_subcommand("families", "closed-form shape families");
    auto* families_check = families_cmd->add_subcommand("check", "verify the family identities");
    families_check->footer("csv columns: name,pass,detail");

    // suite acceptance
    auto* suite_cmd = app.add_subcommand("suite", "verification batteries");
    int suite_jobs = default_jobs();
    bool skip_slow = false;
    auto* suite_acceptance = suite_cmd->add_subcommand("acceptance", "run every criterion");
    suite_acceptance->add_option("--jobs", suite_jobs, "worker threads");
    suite_acceptance->add_flag("--skip-slow", skip_slow, "skip the 10! counterexample census");

    // Let global options like --format appear after any subcommand.
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* node) {
        for (auto* sub : node->get_subcommands(nullptr)) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
        const Format format = parse_format(format_name);

        if (poset_show->parsed()) {
            emit(poset_to_json(poset_source.build()), format);
        } else if (poset_check->parsed()) {
            const Poset p = poset_source.build();
            Json j;
            j["n"] = p.size();
            j["covers"] = p.covers().size();
            j["minimal"] = p.minimal_elements().size();
            j["maximal"] = p.maximal_elements().size();
            j["longest_chain"] = p.longest_chain();
            j["incomparable_pairs"] = p.incomparable_pairs().size();
            if (p.size() <= 10) j["extensions"] = count_dual_linear_extensions(p).str();
            emit(j, format);
        } else if (dc_check->parsed()) {
            const Poset p = dc_source.build();
            emit(verdict_to_json(p, is_d_complete(p)), format);
        } else if (dc_hooks->parsed()) {
            const Poset p = dc_source.build();
            emit(hooks_to_json(p, hook_lengths(p)), format);
        } else if (dc_count->parsed()) {
            const Poset p = dc_source.build();
            const BigInt count = hook_count(p);
            Json j;
            j["count"] = count.str();
            if (dc_brute) {
                const BigInt brute = count_dual_linear_extensions(p);
                j["brute"] = brute.str();
                j["match"] = (brute == count);
            }
            emit(j, format);
            if (dc_brute) require_pass(j["match"] == true, "hook count != extension count");
        } else if (dc_series->parsed()) {
            const Poset p = dc_source.build();
            const SeriesCoefficients series =
                hook_series_coefficients(hook_lengths(p), max_degree);
            Json j;
            j["max_degree"] = max_degree;
            j["hook_series"] = series_to_json(series);
            if (dc_brute) {
                const SeriesCoefficients brute = p_partition_counts(p, max_degree);
                j["p_partition_counts"] = series_to_json(brute);
                j["match"] = (series == brute);
            }
            emit(j, format);
            if (dc_brute) require_pass(j["match"] == true, "series mismatch");
        } else if (jdt_run->parsed()) {
            const Poset p = jdt_source.build();
            const ProcessingOrder sigma = build_order(
                p, order_spec.empty() ? jdt_source.default_order() : order_spec);
            const Permutation pi = parse_int_list(pi_spec);
            const Labeling start = labeling_from_permutation(p, sigma, pi);
            JdtTrace trace;
            const Labeling result = jdt_sort(p, sigma, start, &trace);
            Json j;
            j["pi"] = join_ints(pi);
            j["initial"] = join_ints(start);
            j["result"] = join_ints(result);
            if (with_trace) {
                Json rounds = Json::array();
                for (const auto& round : trace.rounds) {
                    Json r;
                    r["element"] = p.display_name(round.element);
                    Json swaps = Json::array();
                    for (auto [from, to] : round.swaps)
                        swaps.push_back(p.display_name(from) + "->" + p.display_name(to));
                    r["swaps"] = std::move(swaps);
                    rounds.push_back(std::move(r));
                }
                j["trace"] = std::move(rounds);
            }
            emit(j, format);
        } else if (jdt_census->parsed()) {
            const Poset p = jdt_source.build();
            const ProcessingOrder sigma = build_order(
                p, order_spec.empty() ? jdt_source.default_order() : order_spec);
            if (exhaustive == (samples > 0))
                throw CLI::ValidationError("census needs exactly one of --exhaustive, --samples");
            const DistributionReport report =
                exhaustive ? distribution_exhaustive(p, sigma, max_exhaustive_n, jobs)
                           : distribution_sampled(p, sigma, samples, seed);
            if (format == Format::csv) {
                std::cout << "labels,count\n";
                for (std::size_t i = 0; i < report.classes.size(); ++i)
                    std::cout << '"' << join_ints(report.classes[i]) << "\"," << report.counts[i]
                              << "\n";
            } else {
                emit(distribution_report_to_json(p, report), format);
            }
        } else if (dtd_stats->parsed()) {
            const StatProfile formula = stat_profile_formula(stat_m, stat_n);
            Json j = stat_profile_to_json(formula);
            if (dtd_brute) {
                const StatProfile brute = stat_profile_bruteforce(stat_m, stat_n, dtd_jobs);
                j["brute"] = stat_profile_to_json(brute)["counts"];
                j["match"] = (brute.counts == formula.counts);
            }
            if (format == Format::csv) {
                std::cout << "k,count\n";
                for (std::size_t k = 0; k < formula.counts.size(); ++k)
                    std::cout << k << "," << formula.counts[k] << "\n";
            } else {
                emit(j, format);
            }
            if (dtd_brute) require_pass(j["match"] == true, "profile mismatch");
        } else if (dtd_theorem->parsed()) {
            const BigInt difference = theorem_difference(stat_m, stat_n);
            Json j;
            j["m"] = stat_m;
            j["n"] = stat_n;
            j["difference"] = difference.str();
            j["uniform"] = (difference == 0);
            if (dtd_verify) {
                auto [s1, s2] = s_counts_bruteforce(stat_m, stat_n, dtd_jobs);
                j["s1"] = s1.str();
                j["s2"] = s2.str();
                j["match"] = (s1 - s2 == difference);
            }
            emit(j, format);
            if (dtd_verify) require_pass(j["match"] == true, "theorem difference mismatch");
        } else if (phi_apply->parsed()) {
            const Permutation pi = parse_int_list(phi_pi);
            const PhiResult result = phi(phi_m, phi_n, pi);
            Json j;
            j["m"] = phi_m;
            j["n"] = phi_n;
            j["pi"] = join_ints(pi);
            j["exceptional"] = result.exceptional;
            if (result.exceptional)
                j["witness"] = join_ints(result.witness);
            else
                j["image"] = join_ints(result.mapped);
            emit(j, format);
        } else if (phi_verify->parsed()) {
            const InvolutionReport report = verify_involution(phi_m, phi_n, phi_jobs, phi_max);
            emit(involution_report_to_json(report), format);
            require_pass(report.pass(), "involution verification failed");
        } else if (syt_count->parsed()) {
            const Partition shape = Partition::parse(syt_shape);
            const BigInt count = syt_count_hook(shape);
            Json j;
            j["shape"] = shape.to_string();
            j["count"] = count.str();
            if (syt_brute) {
                const BigInt brute = syt_count_bruteforce(shape);
                j["brute"] = brute.str();
                j["match"] = (brute == count);
            }
            emit(j, format);
            if (syt_brute) require_pass(j["match"] == true, "tableau count mismatch");
        } else if (syt_expect->parsed()) {
            const Partition shape = Partition::parse(syt_shape);
            ExpectationReport report = expectation_report(shape, syt_refined);
            Json j = expectation_report_to_json(report);
            if (syt_brute) {
                const BigRat brute = expectation_bruteforce(shape);
                j["brute"] = rational_to_json(brute);
                j["match"] = (brute == report.expectation);
            }
            emit(j, format);
            if (syt_brute) require_pass(j["match"] == true, "expectation mismatch");
        } else if (inset_count_cmd->parsed()) {
            const Partition shape = Partition::parse(inset_shape);
            const BigInt count = inset_count(inset_k, shape);
            Json j;
            j["k"] = inset_k;
            j["shape"] = shape.to_string();
            j["count"] = count.str();
            if (inset_brute) {
                const BigInt brute = count_dual_linear_extensions(inset(inset_k, shape));
                j["brute"] = brute.str();
                j["match"] = (brute == count);
            }
            emit(j, format);
            if (inset_brute) require_pass(j["match"] == true, "inset count mismatch");
        } else if (families_check->parsed()) {
            const auto checks = family_checks();
            bool all_ok = true;
            if (format == Format::csv) {
                std::cout << "name,pass,detail\n";
                for (const auto& c : checks) {
                    std::cout << '"' << c.name << "\"," << (c.pass ? "1" : "0") << ",\"" << c.detail
                              << "\"\n";
                    all_ok = all_ok && c.pass;
                }
            } else {
                Json j = Json::array();
                for (const auto& c : checks) {
                    Json entry;
                    entry["name"] = c.name;
                    entry["pass"] = c.pass;
                    entry["detail"] = c.detail;
                    j.push_back(std::move(entry));
                    all_ok = all_ok && c.pass;
                }
                emit(j, format);
            }
            require_pass(all_ok, "family checks failed");
        } else if (suite_acceptance->parsed()) {
            AcceptanceOptions options;
            options.jobs = suite_jobs;
            options.include_slow = !skip_slow;
            const auto results = run_acceptance(options);
            for (const auto& r : results)
                std::printf("[%s] criterion %d: %s — %s (%.2fs)\n", r.pass ? "PASS" : "FAIL",
                            r.id, r.name.c_str(), r.detail.c_str(), r.seconds);
            require_pass(all_passed(results), "acceptance criteria failed");
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const GuardError& e) {
        std::cerr << "guard violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
