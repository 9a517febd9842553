#include "taquin/involution.hpp"

#include <algorithm>
#include <sstream>

#include "taquin/dtd_stats.hpp"

namespace taquin {

Permutation chi(int n, int t) {
    if (n < 1) throw std::invalid_argument("chi requires n >= 1");
    if (t < 1 || t > 2 * n) throw std::invalid_argument("chi requires 1 <= t <= 2n");
    Permutation out(2 * n);
    for (int i = 1; i <= 2 * n; ++i) {
        int v;
        if (i == t)
            v = 2 * n + 1 - t;
        else if (t <= n && t < i && i <= 2 * n + 1 - t)
            v = i - 1;
        else if (t > n && 2 * n + 1 - t <= i && i < t)
            v = i + 1;
        else
            v = i;
        out[i - 1] = v;
    }
    return out;
}

std::map<int, int> order_bijection(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("order bijection requires |A| = |B|");
    std::vector<int> sa = a, sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (std::adjacent_find(sa.begin(), sa.end()) != sa.end() ||
        std::adjacent_find(sb.begin(), sb.end()) != sb.end())
        throw std::invalid_argument("order bijection requires sets (distinct values)");
    std::map<int, int> out;
    for (std::size_t i = 0; i < sa.size(); ++i) out[sa[i]] = sb[i];
    return out;
}

namespace {

void check_phi_args(int m, int n, const Permutation& pi) {
    if (m < 2 || n < 2) throw std::invalid_argument("phi requires m, n >= 2");
    if (static_cast<int>(pi.size()) != m + n) throw std::invalid_argument("permutation size mismatch");
    if (!is_permutation_one_line(pi)) throw std::invalid_argument("not a one-line permutation");
}

}  // namespace

std::optional<int> phi_k_index(int m, int n, const Permutation& pi) {
    check_phi_args(m, n, pi);
    if (m >= n) throw std::invalid_argument("k index belongs to the case m < n");
    for (int k = 1; k <= m; ++k)
        if (pi[k - 1] <= 2 * (m + 1 - k)) return k;
    return std::nullopt;
}

std::vector<int> phi_entry_window(int m, int n, const Permutation& pi) {
    check_phi_args(m, n, pi);
    if (m <= n) throw std::invalid_argument("entry window belongs to the case m > n");
    std::vector<int> a(pi.begin() + (m - n), pi.end());
    std::sort(a.begin(), a.end());
    return a;
}

int phi_t_value(int m, int n, const Permutation& pi) {
    const auto a = phi_entry_window(m, n, pi);
    std::vector<int> b(2 * n);
    std::iota(b.begin(), b.end(), 1);
    return order_bijection(a, b).at(pi[m - n]);
}

PhiResult phi(int m, int n, const Permutation& pi) {
    check_phi_args(m, n, pi);
    PhiResult result;

    if (m == n) {
        // Phi(pi) = chi_{n,pi_1} o pi.
        const Permutation x = chi(n, pi[0]);
        result.mapped.resize(pi.size());
        for (std::size_t i = 0; i < pi.size(); ++i) result.mapped[i] = x[pi[i] - 1];
        return result;
    }

    if (m > n) {
        // Conjugate the last 2n entries through the order bijection onto [2n].
        const auto a = phi_entry_window(m, n, pi);
        std::vector<int> b(2 * n);
        std::iota(b.begin(), b.end(), 1);
        const auto ab = order_bijection(a, b);
        const auto ba = order_bijection(b, a);
        const Permutation x = chi(n, ab.at(pi[m - n]));
        result.mapped = pi;
        for (int i = m - n; i < m + n; ++i) result.mapped[i] = ba.at(x[ab.at(pi[i]) - 1]);
        return result;
    }

    // m < n: act with chi on the values up to 2(m+1-k); everything larger is
    // fixed. If no prefix entry is small enough, pi is exceptional.
    const auto k = phi_k_index(m, n, pi);
    if (!k) {
        result.exceptional = true;
        for (int i = 1; i <= m; ++i) result.witness.push_back(i);
        return result;
    }
    const int half = m + 1 - *k;
    const Permutation x = chi(half, pi[*k - 1]);
    result.mapped = pi;
    for (std::size_t i = 0; i < pi.size(); ++i)
        if (pi[i] <= 2 * half) result.mapped[i] = x[pi[i] - 1];
    return result;
}

BigInt exceptional_count(int m, int n) {
    if (m >= n) return 0;
    return binomial(n - 1, m) * factorial(m) * factorial(n);
}

std::vector<Permutation> enumerate_exceptional(int m, int n, int max_size) {
    if (m + n > max_size)
        throw GuardError("exceptional enumeration guarded to m+n <= " + std::to_string(max_size));
    std::vector<Permutation> out;
    for_each_permutation(m + n, [&](const Permutation& pi) {
        for (int i = 1; i <= m; ++i)
            if (pi[i - 1] <= 2 * (m + 1 - i)) return;
        out.push_back(pi);
    });
    return out;
}

bool InvolutionReport::pass() const {
    return involutive && type_inverting && exceptional_one_type && count_matches &&
           bookkeeping_ok && sign_consistent;
}

InvolutionReport verify_involution(int m, int n, int jobs, int max_size) {
    if (m < 2 || n < 2) throw std::invalid_argument("verification requires m, n >= 2");
    if (m + n > max_size)
        throw GuardError("involution verification guarded to m+n <= " + std::to_string(max_size));
    if (jobs < 1) jobs = 1;

    struct Tally {
        std::uint64_t total = 0, exceptional = 0;
        bool involutive = true, type_inverting = true, bookkeeping = true, exc_uniform = true;
        int exc_type = 0;
        std::vector<std::string> failures;
        void fail(std::string msg) {
            if (failures.size() < 5) failures.push_back(std::move(msg));
        }
    };
    std::vector<Tally> tallies(jobs);
    DtdContext ctx(m, n);

    for_each_permutation_parallel(m + n, jobs, [&](int ti, const Permutation& pi) {
        Tally& t = tallies[ti];
        ++t.total;
        const PhiResult r = phi(m, n, pi);
        const int tau = ctx.type_by_jdt(pi);

        if (r.exceptional) {
            ++t.exceptional;
            if (m >= n) {
                t.exc_uniform = false;
                t.fail("exceptional permutation with m >= n: " + join_ints(pi));
            }
            if (t.exc_type == 0)
                t.exc_type = tau;
            else if (t.exc_type != tau) {
                t.exc_uniform = false;
                t.fail("exceptional permutations of mixed type: " + join_ints(pi));
            }
            return;
        }

        const Permutation& image = r.mapped;
        const PhiResult back = phi(m, n, image);
        if (back.exceptional || back.mapped != pi) {
            t.involutive = false;
            t.fail("phi^2 != id at " + join_ints(pi));
        }
        if (ctx.type_by_jdt(image) != -tau) {
            t.type_inverting = false;
            t.fail("phi not type-inverting at " + join_ints(pi));
        }
        if (m == n) {
            if (image[0] != 2 * n + 1 - pi[0]) {
                t.bookkeeping = false;
                t.fail("first entry not reflected at " + join_ints(pi));
            }
        } else if (m > n) {
            if (phi_t_value(m, n, image) != 2 * n + 1 - phi_t_value(m, n, pi) ||
                phi_entry_window(m, n, image) != phi_entry_window(m, n, pi)) {
                t.bookkeeping = false;
                t.fail("t/A bookkeeping broken at " + join_ints(pi));
            }
        } else {
            if (phi_k_index(m, n, image) != phi_k_index(m, n, pi)) {
                t.bookkeeping = false;
                t.fail("k index not preserved at " + join_ints(pi));
            }
        }
    });

    InvolutionReport report;
    report.m = m;
    report.n = n;
    report.expected_exceptional = exceptional_count(m, n);
    BigInt total = 0, exceptional = 0;
    for (const Tally& t : tallies) {
        total += t.total;
        exceptional += t.exceptional;
        report.involutive = report.involutive && t.involutive;
        report.type_inverting = report.type_inverting && t.type_inverting;
        report.bookkeeping_ok = report.bookkeeping_ok && t.bookkeeping;
        report.exceptional_one_type = report.exceptional_one_type && t.exc_uniform;
        if (t.exc_type != 0) {
            if (report.exceptional_type == 0)
                report.exceptional_type = t.exc_type;
            else if (report.exceptional_type != t.exc_type)
                report.exceptional_one_type = false;
        }
        for (const auto& f : t.failures)
            if (report.failures.size() < 10) report.failures.push_back(f);
    }
    report.total = total;
    report.exceptional_found = exceptional;
    report.count_matches = (exceptional == report.expected_exceptional);

    const BigInt diff = theorem_difference(m, n);
    if (exceptional == 0)
        report.sign_consistent = (diff == 0);
    else
        report.sign_consistent = (diff == BigInt(report.exceptional_type) * exceptional);
    if (!report.sign_consistent) report.failures.push_back("s1-s2 does not match the exceptional class");
    return report;
}

}  // namespace taquin
