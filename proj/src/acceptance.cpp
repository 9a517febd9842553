#include "taquin/acceptance.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "taquin/dcomplete.hpp"
#include "taquin/dtd_stats.hpp"
#include "taquin/involution.hpp"
#include "taquin/jdt.hpp"
#include "taquin/tableaux.hpp"

namespace taquin {

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& current,
                    const std::function<void(const std::vector<int>&)>& emit) {
    if (remaining == 0) {
        emit(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        gen_partitions(remaining - part, part, current, emit);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> current;
    gen_partitions(n, n, current, [&](const std::vector<int>& parts) { out.emplace_back(parts); });
    return out;
}

std::vector<Partition> partitions_up_to(int max_cells) {
    std::vector<Partition> out;
    for (int n = 1; n <= max_cells; ++n)
        for (auto& p : partitions_of(n)) out.push_back(std::move(p));
    return out;
}

std::vector<Partition> strict_partitions_up_to(int max_cells) {
    std::vector<Partition> out;
    for (auto& p : partitions_up_to(max_cells))
        if (p.is_strict()) out.push_back(std::move(p));
    return out;
}

std::vector<Partition> partitions_with_exact_parts(int n, int k) {
    std::vector<Partition> out;
    for (auto& p : partitions_of(n))
        if (p.rows() == k) out.push_back(std::move(p));
    return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

namespace {

struct CriterionRecorder {
    bool pass = true;
    int checked = 0;
    std::ostringstream failures;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok) {
            if (pass) failures << what;
            else failures << "; " << what;
            pass = false;
        }
    }
    std::string detail(const std::string& on_pass) const {
        if (pass) return on_pass + " (" + std::to_string(checked) + " checks)";
        return failures.str();
    }
};

// 1. Exhaustive sorts on D_{m,n} reproduce the signed difference formula.
CriterionResult criterion_theorem(const AcceptanceOptions& opt) {
    CriterionRecorder rec;
    for (int m = 2; m <= 7; ++m)
        for (int n = 2; m + n <= 9; ++n) {
            auto [s1, s2] = s_counts_bruteforce(m, n, opt.jobs);
            const BigInt want = theorem_difference(m, n);
            const BigInt got = s1 - s2;
            rec.expect(got == want && s1 + s2 == factorial(m + n),
                       "D_{" + std::to_string(m) + "," + std::to_string(n) + "}: got " +
                           got.str() + ", want " + want.str());
        }
    return {1, "theorem difference s1-s2 = (-1)^m C(n-1,m) m! n!, m+n <= 9", rec.pass,
            rec.detail("exact for all m,n"), 0.0};
}

// 2. The statistic profile matches the Stirling closed form and recurrence.
CriterionResult criterion_profile(const AcceptanceOptions& opt) {
    CriterionRecorder rec;
    for (int m = 1; m <= 8; ++m)
        for (int n = 1; m + n <= 9; ++n) {
            const StatProfile brute = stat_profile_bruteforce(m, n, opt.jobs);
            const StatProfile formula = stat_profile_formula(m, n);
            rec.expect(brute.counts == formula.counts,
                       "profile mismatch at m=" + std::to_string(m) + ", n=" + std::to_string(n));
            rec.expect(formula.total() == factorial(m + n),
                       "profile total mismatch at m=" + std::to_string(m));
        }
    for (int m = 2; m <= 8; ++m)
        for (int n = 1; n <= 8; ++n) {
            const StatProfile big = stat_profile_formula(m, n);
            const StatProfile small = stat_profile_formula(m - 1, n);
            for (int k = 1; k < m; ++k)
                rec.expect(BigInt(m) * small.counts[k] + BigInt(n) * small.counts[k - 1] ==
                               big.counts[k],
                           "recurrence fails at m=" + std::to_string(m) + ", n=" +
                               std::to_string(n) + ", k=" + std::to_string(k));
        }
    return {2, "statistic distribution n^k [m+1 choose k+1] n! and its recurrence", rec.pass,
            rec.detail("brute force equals closed form"), 0.0};
}

// 3. The involution suite over S_{m+n}, m+n <= 8.
CriterionResult criterion_involution(const AcceptanceOptions& opt) {
    CriterionRecorder rec;
    for (int m = 2; m <= 6; ++m)
        for (int n = 2; m + n <= 8; ++n) {
            const InvolutionReport report = verify_involution(m, n, opt.jobs);
            std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
            rec.expect(report.pass(), "involution suite fails at " + tag +
                                          (report.failures.empty() ? "" : ": " + report.failures[0]));
        }
    return {3, "involution: phi^2 = id, type-inverting, exceptional census, bookkeeping", rec.pass,
            rec.detail("all pairs verified"), 0.0};
}

// 4. Hook-length counts equal brute-force linear-extension counts.
CriterionResult criterion_hooks(const AcceptanceOptions&) {
    CriterionRecorder rec;
    auto check_poset = [&](const Poset& p, const std::string& tag) {
        rec.expect(hook_count(p) == count_dual_linear_extensions(p), "count mismatch for " + tag);
    };
    for (const auto& shape : partitions_up_to(8)) check_poset(young(shape), "young " + shape.to_string());
    for (const auto& shape : strict_partitions_up_to(8))
        check_poset(shifted_young(shape), "shifted " + shape.to_string());
    for (int m = 2; m <= 7; ++m)
        for (int n = 2; n <= m && m + n <= 9; ++n)
            check_poset(double_tailed_diamond(m, n),
                        "D_{" + std::to_string(m) + "," + std::to_string(n) + "}");
    for (int k = 2; k <= 7; ++k)
        for (int n = k; n + k <= 9; ++n)
            for (const auto& shape : partitions_with_exact_parts(n, k))
                check_poset(inset(k, shape), "inset " + std::to_string(k) + ":" + shape.to_string());

    const Partition anchor({3, 3, 2, 1});
    rec.expect(hook_count(young(anchor)) == 168, "young (3,3,2,1) != 168");
    const Poset anchor_inset = inset(4, anchor);
    rec.expect(hook_count(anchor_inset) == 429, "inset 4:(3,3,2,1) hook count != 429");
    rec.expect(inset_count(4, anchor) == 429, "inset 4:(3,3,2,1) product formula != 429");
    rec.expect(count_dual_linear_extensions(anchor_inset) == 429,
               "inset 4:(3,3,2,1) extension count != 429");
    return {4, "hook-length formula on Young/shifted/D_{m,n}/inset families", rec.pass,
            rec.detail("hook counts exact"), 0.0};
}

// 5. Uniformity holds exactly where claimed and fails where claimed.
CriterionResult criterion_uniformity(const AcceptanceOptions& opt) {
    CriterionRecorder rec;

    struct UniformInstance {
        Poset poset;
        ProcessingOrder order;
        std::string tag;
    };
    std::vector<UniformInstance> uniform_small;  // for the add-a-maximum check

    auto check_uniform = [&](const Poset& p, const ProcessingOrder& sigma, const std::string& tag,
                             bool expect_uniform) {
        const DistributionReport report = distribution_exhaustive(p, sigma, 11, opt.jobs);
        rec.expect(report.uniform == expect_uniform,
                   tag + (expect_uniform ? " should be uniform" : " should not be uniform"));
        if (expect_uniform && report.uniform && p.size() <= 7)
            uniform_small.push_back({p, sigma, tag});
    };

    for (const auto& shape : partitions_up_to(7)) {
        const Poset p = young(shape);
        check_uniform(p, order_column_wise(p), "young " + shape.to_string() + " column-wise", true);
    }
    for (const auto& shape : strict_partitions_up_to(7)) {
        const Poset p = shifted_young(shape);
        check_uniform(p, order_row_wise(p), "shifted " + shape.to_string() + " row-wise", true);
    }
    for (int m = 2; m <= 7; ++m)
        for (int n = 2; m + n <= 9; ++n) {
            const Poset p = double_tailed_diamond(m, n);
            check_uniform(p, order_dtd(p),
                          "D_{" + std::to_string(m) + "," + std::to_string(n) + "}", m >= n);
        }

    if (opt.include_slow) {
        const Poset p = shifted_young(Partition({4, 3, 2, 1}));
        check_uniform(p, order_column_wise(p), "shifted 4,3,2,1 column-wise", false);
    }

    for (const auto& inst : uniform_small) {
        const Poset extended = add_maximum(inst.poset);
        ProcessingOrder sigma = inst.order;
        sigma.push_back(extended.size());
        check_uniform(extended, sigma, inst.tag + " plus maximum", true);
    }

    return {5, "uniform distribution reproductions (and the column-wise failure)", rec.pass,
            rec.detail("all censuses as claimed"), 0.0};
}

// 6. The second-row-leader expectation, exact rational equality.
CriterionResult criterion_expectation(const AcceptanceOptions&) {
    CriterionRecorder rec;
    for (const auto& shape : partitions_up_to(8)) {
        if (shape.rows() < 2) continue;
        rec.expect(expectation_closed_form(shape) == expectation_bruteforce(shape),
                   "expectation mismatch for " + shape.to_string());
    }
    const Partition anchor({3, 3, 2, 1});
    rec.expect(expectation_closed_form(anchor) == BigRat(429, 168), "(3,3,2,1) != 429/168");
    rec.expect(expectation_bruteforce(anchor) == BigRat(429, 168),
               "(3,3,2,1) brute force != 429/168");
    for (int k = 2; k <= 5; ++k) {
        std::vector<int> parts{k};
        parts.insert(parts.end(), k - 1, 1);
        const Partition hook_shape(parts);
        rec.expect(expectation_closed_form(hook_shape) == BigRat(3 * k - 1, k),
                   "hook shape k=" + std::to_string(k) + " != 3 - 1/k");
        rec.expect(expectation_bruteforce(hook_shape) == BigRat(3 * k - 1, k),
                   "hook shape k=" + std::to_string(k) + " brute force != 3 - 1/k");
    }
    const Partition staircase({3, 2, 1});
    rec.expect(expectation_closed_form(staircase) == BigRat(21, 8), "staircase (3,2,1) != 21/8");
    rec.expect(expectation_bruteforce(staircase) == BigRat(21, 8),
               "staircase (3,2,1) brute force != 21/8");
    return {6, "second-row-leader expectation: closed form = tableau average", rec.pass,
            rec.detail("exact rational equality"), 0.0};
}

// 7. P-partition generating function factorizes over the hooks.
CriterionResult criterion_series(const AcceptanceOptions&) {
    CriterionRecorder rec;
    constexpr int degree = 12;
    auto check_poset = [&](const Poset& p, const std::string& tag) {
        if (p.size() > 7) return;
        rec.expect(p_partition_counts(p, degree) ==
                       hook_series_coefficients(hook_lengths(p), degree),
                   "series mismatch for " + tag);
    };
    for (const auto& shape : partitions_up_to(7)) check_poset(young(shape), "young " + shape.to_string());
    for (const auto& shape : strict_partitions_up_to(7))
        check_poset(shifted_young(shape), "shifted " + shape.to_string());
    for (int m = 2; m <= 5; ++m)
        for (int n = 2; n <= m && m + n <= 7; ++n)
            check_poset(double_tailed_diamond(m, n),
                        "D_{" + std::to_string(m) + "," + std::to_string(n) + "}");
    for (int k = 2; k <= 5; ++k)
        for (int n = k; n + k <= 7; ++n)
            for (const auto& shape : partitions_with_exact_parts(n, k))
                check_poset(inset(k, shape), "inset " + std::to_string(k) + ":" + shape.to_string());
    return {7, "P-partition counts match prod 1/(1-x^h) up to degree 12", rec.pass,
            rec.detail("coefficientwise equality"), 0.0};
}

// 8. Sampled censuses on insets look uniform; small insets are exactly uniform.
CriterionResult criterion_inset_experiments(const AcceptanceOptions& opt) {
    CriterionRecorder rec;
    constexpr std::uint64_t samples = 100000;
    constexpr std::uint64_t seed = 12345;
    constexpr double p_threshold = 0.001;

    auto check_sampled = [&](int k, const Partition& shape) {
        const Poset p = inset(k, shape);
        const DistributionReport report =
            distribution_sampled(p, order_row_wise(p), samples, seed);
        std::ostringstream what;
        what << "inset " << k << ":" << shape.to_string() << " p-value " << report.p_value
             << " <= " << p_threshold;
        rec.expect(report.p_value > p_threshold, what.str());
    };
    check_sampled(3, Partition({2, 2, 1}));
    check_sampled(4, Partition({3, 2, 2, 1}));

    for (int k = 2; k <= 6; ++k)
        for (int n = k; n + k <= 8; ++n)
            for (const auto& shape : partitions_with_exact_parts(n, k)) {
                const Poset p = inset(k, shape);
                const DistributionReport report =
                    distribution_exhaustive(p, order_row_wise(p), 11, opt.jobs);
                rec.expect(report.uniform,
                           "inset " + std::to_string(k) + ":" + shape.to_string() + " not uniform");
            }
    return {8, "inset censuses: sampled chi-square consistent with uniform, small insets exact",
            rec.pass, rec.detail("sampled p-values above 0.001; exhaustive censuses uniform"), 0.0};
}

// 9. Asymptotic trends for the rectangle and staircase families.
CriterionResult criterion_trends(const AcceptanceOptions&) {
    CriterionRecorder rec;
    for (const auto& check : family_checks())
        rec.expect(check.pass, check.name + ": " + check.detail);
    return {9, "family closed forms and asymptotic trend checks", rec.pass,
            rec.detail("all families as expected"), 0.0};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
    using Clock = std::chrono::steady_clock;
    std::vector<CriterionResult> results;
    const std::vector<std::function<CriterionResult(const AcceptanceOptions&)>> criteria = {
        criterion_theorem,  criterion_profile,     criterion_involution,
        criterion_hooks,    criterion_uniformity,  criterion_expectation,
        criterion_series,   criterion_inset_experiments, criterion_trends,
    };
    for (const auto& run : criteria) {
        const auto start = Clock::now();
        CriterionResult result = run(options);
        result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        results.push_back(std::move(result));
    }
    return results;
}

}  // namespace taquin
