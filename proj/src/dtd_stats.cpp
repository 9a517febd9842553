#include "taquin/dtd_stats.hpp"

#include <algorithm>
#include <stdexcept>

namespace taquin {

bool is_rl_k_min(const Permutation& pi, int i, int k) {
    const int n = static_cast<int>(pi.size());
    if (i < 1 || i > n) throw std::invalid_argument("position out of range");
    if (k < 1) throw std::invalid_argument("k must be positive");
    int rank = 0;
    for (int j = i; j <= n; ++j)
        if (pi[j - 1] <= pi[i - 1]) ++rank;
    return rank <= k;
}

int c_statistic(const Permutation& pi, int m) {
    const int n = static_cast<int>(pi.size());
    if (m < 0 || m >= n) throw std::invalid_argument("m must satisfy 0 <= m < |pi|");
    int c = 0;
    for (int i = 1; i <= m; ++i)
        if (is_rl_k_min(pi, i, m + 1 - i)) ++c;
    return c;
}

BigInt stirling_first(int s, int t) {
    if (s < 0 || t < 0) throw std::invalid_argument("stirling numbers need nonnegative arguments");
    if (t > s) return 0;
    // c[j] = stirling1(row, j), grown row by row via
    // stirling1(s+1, t) = s*stirling1(s, t) + stirling1(s, t-1).
    std::vector<BigInt> c(s + 1, 0);
    c[0] = 1;
    for (int row = 1; row <= s; ++row)
        for (int j = std::min(row, s); j >= 0; --j) {
            c[j] *= (row - 1);
            if (j > 0) c[j] += c[j - 1];
        }
    return c[t];
}

BigInt StatProfile::total() const {
    BigInt t = 0;
    for (const BigInt& c : counts) t += c;
    return t;
}

StatProfile stat_profile_bruteforce(int m, int n, int jobs, int max_size) {
    if (m < 1 || n < 1) throw std::invalid_argument("profile requires m, n >= 1");
    if (m + n > max_size)
        throw GuardError("brute-force profile guarded to m+n <= " + std::to_string(max_size));
    if (jobs < 1) jobs = 1;
    std::vector<std::vector<std::uint64_t>> partial(jobs, std::vector<std::uint64_t>(m + 1, 0));
    for_each_permutation_parallel(m + n, jobs, [&](int t, const Permutation& pi) {
        ++partial[t][m - c_statistic(pi, m)];
    });
    StatProfile profile;
    profile.m = m;
    profile.n = n;
    profile.counts.assign(m + 1, 0);
    for (int t = 0; t < jobs; ++t)
        for (int k = 0; k <= m; ++k) profile.counts[k] += partial[t][k];
    return profile;
}

StatProfile stat_profile_formula(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("profile requires m, n >= 1");
    StatProfile profile;
    profile.m = m;
    profile.n = n;
    const BigInt n_fact = factorial(n);
    BigInt n_pow = 1;
    for (int k = 0; k <= m; ++k) {
        profile.counts.push_back(n_pow * stirling_first(m + 1, k + 1) * n_fact);
        n_pow *= n;
    }
    return profile;
}

DtdContext::DtdContext(int m, int n)
    : m_(m), n_(n), poset_(double_tailed_diamond(m, n)), order_(order_dtd(poset_)) {
    round_elem_.resize(poset_.size());
    for (int v = 0; v < poset_.size(); ++v) round_elem_[order_[v] - 1] = v;
    row1_box_ = *poset_.element_at(1, m);
    row2_box_ = *poset_.element_at(2, m - 1);
}

int DtdContext::type_by_jdt(const Permutation& pi) const {
    const int n = poset_.size();
    if (static_cast<int>(pi.size()) != n) throw std::invalid_argument("permutation size mismatch");
    Labeling labels(n, 0);
    for (int j = 0; j < n; ++j) labels[round_elem_[j]] = pi[n - 1 - j];
    for (int x : round_elem_) jdt_round(poset_, labels, x);
    // The pair ends with labels {m, m+1}; T1 carries the smaller one in row 1.
    if (labels[row1_box_] == m_) return +1;
    if (labels[row1_box_] == m_ + 1) return -1;
    throw std::runtime_error("unexpected final label at the incomparable pair");
}

std::pair<int, int> DtdContext::pair_labels_after(const Permutation& pi, int rounds) const {
    const int n = poset_.size();
    if (static_cast<int>(pi.size()) != n) throw std::invalid_argument("permutation size mismatch");
    if (rounds < 0 || rounds > n) throw std::invalid_argument("round count out of range");
    Labeling labels(n, 0);
    for (int j = 0; j < n; ++j) labels[round_elem_[j]] = pi[n - 1 - j];
    for (int i = 0; i < rounds; ++i) jdt_round(poset_, labels, round_elem_[i]);
    return {labels[row1_box_], labels[row2_box_]};
}

int type_by_parity(int m, int n, const Permutation& pi) {
    if (static_cast<int>(pi.size()) != m + n) throw std::invalid_argument("permutation size mismatch");
    if (m < 2 || n < 2) throw std::invalid_argument("type is defined for m, n >= 2");
    return (m - c_statistic(pi, m)) % 2 == 0 ? +1 : -1;
}

int type_of(int m, int n, const Permutation& pi) {
    DtdContext ctx(m, n);
    const int by_jdt = ctx.type_by_jdt(pi);
    const int by_parity = type_by_parity(m, n, pi);
    if (by_jdt != by_parity)
        throw std::runtime_error("type implementations disagree (sort vs parity)");
    return by_jdt;
}

BigInt theorem_difference(int m, int n) {
    if (m < 2 || n < 2) throw std::invalid_argument("theorem difference requires m, n >= 2");
    BigInt d = binomial(n - 1, m) * factorial(m) * factorial(n);
    return (m % 2 == 0) ? d : -d;
}

std::pair<BigInt, BigInt> s_counts_bruteforce(int m, int n, int jobs, int max_size) {
    if (m < 2 || n < 2) throw std::invalid_argument("counts require m, n >= 2");
    if (m + n > max_size)
        throw GuardError("brute-force counts guarded to m+n <= " + std::to_string(max_size));
    if (jobs < 1) jobs = 1;
    DtdContext ctx(m, n);
    std::vector<std::uint64_t> s1(jobs, 0), s2(jobs, 0);
    for_each_permutation_parallel(m + n, jobs, [&](int t, const Permutation& pi) {
        (ctx.type_by_jdt(pi) > 0 ? s1[t] : s2[t])++;
    });
    BigInt total1 = 0, total2 = 0;
    for (int t = 0; t < jobs; ++t) {
        total1 += s1[t];
        total2 += s2[t];
    }
    return {total1, total2};
}

}  // namespace taquin
