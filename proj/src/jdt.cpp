#include "taquin/jdt.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <random>

#include <boost/math/special_functions/gamma.hpp>

namespace taquin {

bool JdtTrace::empty() const {
    for (const auto& r : rounds)
        if (!r.swaps.empty()) return false;
    return true;
}

BigInt DistributionReport::total() const {
    BigInt t = 0;
    for (const BigInt& c : counts) t += c;
    return t;
}

namespace {

std::vector<int> elements_in_order(const Poset& p, const ProcessingOrder& sigma) {
    if (!is_linear_extension(p, sigma))
        throw std::invalid_argument("processing order must be a linear extension");
    std::vector<int> order(p.size());
    for (int v = 0; v < p.size(); ++v) order[sigma[v] - 1] = v;
    return order;
}

// One sorting round: bubble the label at x down while a lower cover holds a
// smaller label, always swapping with the smallest such label.
template <typename OnSwap>
void run_round(const Poset& p, std::vector<int>& labels, int x, OnSwap&& on_swap) {
    int cur = x;
    for (;;) {
        const auto& lows = p.lower_covers(cur);
        int best = -1;
        for (int y : lows)
            if (best < 0 || labels[y] < labels[best]) best = y;
        if (best < 0 || labels[cur] < labels[best]) return;
        std::swap(labels[cur], labels[best]);
        on_swap(cur, best);
        cur = best;
    }
}

}  // namespace

void jdt_round(const Poset& p, Labeling& labels, int x) {
    run_round(p, labels, x, [](int, int) {});
}

Labeling jdt_sort(const Poset& p, const ProcessingOrder& sigma, const Labeling& start,
                  JdtTrace* trace) {
    if (static_cast<int>(start.size()) != p.size() || !is_permutation_one_line(start))
        throw std::invalid_argument("starting labeling must be a bijection onto {1..n}");
    auto order = elements_in_order(p, sigma);
    Labeling labels = start;
    if (trace) trace->rounds.clear();
    for (int x : order) {
        JdtRound round;
        round.element = x;
        run_round(p, labels, x, [&](int from, int to) {
            if (trace) round.swaps.emplace_back(from, to);
        });
        if (trace) trace->rounds.push_back(std::move(round));
    }
    assert(is_dual_linear_extension(p, labels));
    return labels;
}

Labeling jdt_sort_with_snapshots(const Poset& p, const ProcessingOrder& sigma, const Labeling& start,
                                 const std::function<void(int, const Labeling&)>& snapshot) {
    if (static_cast<int>(start.size()) != p.size() || !is_permutation_one_line(start))
        throw std::invalid_argument("starting labeling must be a bijection onto {1..n}");
    auto order = elements_in_order(p, sigma);
    Labeling labels = start;
    int round = 0;
    for (int x : order) {
        run_round(p, labels, x, [](int, int) {});
        snapshot(++round, labels);
    }
    return labels;
}

Labeling labeling_from_permutation(const Poset& p, const ProcessingOrder& sigma, const Permutation& pi) {
    const int n = p.size();
    if (static_cast<int>(pi.size()) != n) throw std::invalid_argument("permutation size mismatch");
    if (!is_permutation_one_line(pi)) throw std::invalid_argument("not a one-line permutation");
    auto order = elements_in_order(p, sigma);
    Labeling labels(n, 0);
    for (int j = 0; j < n; ++j) labels[order[j]] = pi[n - 1 - j];
    return labels;
}

namespace {

ProcessingOrder order_by_scan(const Poset& p, bool column_major) {
    if (!p.has_coords())
        throw std::invalid_argument("this order requires a poset with box coordinates");
    std::vector<int> elems(p.size());
    for (int v = 0; v < p.size(); ++v) elems[v] = v;
    std::sort(elems.begin(), elems.end(), [&](int a, int b) {
        auto [ra, ca] = p.coord(a);
        auto [rb, cb] = p.coord(b);
        if (column_major) return std::tie(ca, ra) > std::tie(cb, rb);
        return std::tie(ra, ca) > std::tie(rb, cb);
    });
    ProcessingOrder sigma(p.size(), 0);
    for (int j = 0; j < p.size(); ++j) sigma[elems[j]] = j + 1;
    if (!is_linear_extension(p, sigma))
        throw std::runtime_error("scan order is not a linear extension of this poset");
    return sigma;
}

}  // namespace

ProcessingOrder order_column_wise(const Poset& p) { return order_by_scan(p, true); }
ProcessingOrder order_row_wise(const Poset& p) { return order_by_scan(p, false); }

ProcessingOrder order_dtd(const Poset& p) {
    if (!p.has_coords())
        throw std::invalid_argument("order_dtd requires a poset with box coordinates");
    int m = 0, n = 0;
    for (int v = 0; v < p.size(); ++v) {
        int row = p.coord(v).first;
        if (row == 1)
            ++m;
        else if (row == 2)
            ++n;
        else
            throw std::invalid_argument("order_dtd requires a double-tailed diamond");
    }
    if (m < 2 || n < 2 || m + n != p.size())
        throw std::invalid_argument("order_dtd requires a double-tailed diamond");
    ProcessingOrder sigma(p.size(), 0);
    for (int v = 0; v < p.size(); ++v) {
        auto [row, col] = p.coord(v);
        sigma[v] = (row == 1) ? (m + n + 1 - col) : (m + n - 1 - col);
    }
    if (!is_linear_extension(p, sigma))
        throw std::invalid_argument("order_dtd requires a double-tailed diamond");
    return sigma;
}

namespace {

struct CensusSetup {
    std::vector<int> order;            // elements in sigma order
    std::vector<Labeling> classes;     // all dual linear extensions
    std::map<Labeling, int> class_of;  // canonical serialization -> index
};

CensusSetup census_setup(const Poset& p, const ProcessingOrder& sigma) {
    CensusSetup s;
    s.order = elements_in_order(p, sigma);
    s.classes = all_dual_linear_extensions(p);
    for (std::size_t i = 0; i < s.classes.size(); ++i)
        s.class_of[s.classes[i]] = static_cast<int>(i);
    return s;
}

// Runs one sort for permutation pi, reusing the labels buffer.
int census_run(const Poset& p, const CensusSetup& s, const Permutation& pi, Labeling& labels) {
    const int n = p.size();
    for (int j = 0; j < n; ++j) labels[s.order[j]] = pi[n - 1 - j];
    for (int x : s.order) run_round(p, labels, x, [](int, int) {});
    auto it = s.class_of.find(labels);
    if (it == s.class_of.end())
        throw std::logic_error("sort produced a labeling outside the extension classes");
    return it->second;
}

}  // namespace

DistributionReport distribution_exhaustive(const Poset& p, const ProcessingOrder& sigma,
                                           int max_exhaustive_n, int jobs) {
    const int n = p.size();
    if (n > max_exhaustive_n)
        throw GuardError("exhaustive census guarded to n <= " + std::to_string(max_exhaustive_n));
    CensusSetup setup = census_setup(p, sigma);
    const std::size_t f = setup.classes.size();

    if (jobs < 1) jobs = 1;
    std::vector<std::vector<std::uint64_t>> partial(jobs, std::vector<std::uint64_t>(f, 0));
    std::vector<Labeling> buffers(jobs, Labeling(n, 0));
    for_each_permutation_parallel(n, jobs, [&](int t, const Permutation& pi) {
        ++partial[t][census_run(p, setup, pi, buffers[t])];
    });

    DistributionReport report;
    report.exhaustive = true;
    report.ensemble_size = factorial(n);
    report.classes = std::move(setup.classes);
    report.counts.assign(f, 0);
    for (int t = 0; t < jobs; ++t)
        for (std::size_t i = 0; i < f; ++i) report.counts[i] += partial[t][i];
    report.expected_per_class = BigRat(report.ensemble_size, BigInt(f));
    report.uniform = true;
    for (const BigInt& c : report.counts)
        if (BigRat(c) != report.expected_per_class) report.uniform = false;
    assert(report.total() == report.ensemble_size);
    return report;
}

DistributionReport distribution_sampled(const Poset& p, const ProcessingOrder& sigma,
                                        std::uint64_t samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("sample count must be >= 1");
    const int n = p.size();
    CensusSetup setup = census_setup(p, sigma);
    const std::size_t f = setup.classes.size();

    std::mt19937_64 rng(seed);
    auto rand_below = [&rng](std::uint64_t bound) {
        const std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
        for (;;) {
            std::uint64_t r = rng();
            if (r >= threshold) return r % bound;
        }
    };

    std::vector<std::uint64_t> counts(f, 0);
    Permutation pi = identity_permutation(n);
    Labeling labels(n, 0);
    for (std::uint64_t s = 0; s < samples; ++s) {
        for (int i = n - 1; i > 0; --i)
            std::swap(pi[i], pi[rand_below(static_cast<std::uint64_t>(i) + 1)]);
        ++counts[census_run(p, setup, pi, labels)];
    }

    DistributionReport report;
    report.exhaustive = false;
    report.samples = samples;
    report.seed = seed;
    report.ensemble_size = samples;
    report.classes = std::move(setup.classes);
    report.counts.assign(counts.begin(), counts.end());

    const double expected = static_cast<double>(samples) / static_cast<double>(f);
    double chi2 = 0.0;
    for (std::uint64_t c : counts) {
        const double d = static_cast<double>(c) - expected;
        chi2 += d * d / expected;
    }
    report.chi_square = chi2;
    report.p_value = (f > 1) ? boost::math::gamma_q((f - 1) / 2.0, chi2 / 2.0) : 1.0;
    return report;
}

}  // namespace taquin
