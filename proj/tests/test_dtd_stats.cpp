#include <doctest.h>

#include <algorithm>
#include <map>

#include "taquin/dtd_stats.hpp"

using namespace taquin;

namespace {

// Rank pattern of the last `len` entries, used to group permutations that
// agree in relative order.
std::vector<int> suffix_pattern(const Permutation& pi, int len) {
    const int n = static_cast<int>(pi.size());
    std::vector<int> suffix(pi.end() - len, pi.end());
    std::vector<int> pattern(len);
    for (int i = 0; i < len; ++i) {
        int rank = 0;
        for (int j = 0; j < len; ++j)
            if (suffix[j] < suffix[i]) ++rank;
        pattern[i] = rank;
    }
    (void)n;
    return pattern;
}

}  // namespace

TEST_SUITE("dtd_stats") {

TEST_CASE("suffix rank test") {
    CHECK(is_rl_k_min({3, 2, 1}, 3, 1));
    CHECK_FALSE(is_rl_k_min({3, 2, 1}, 1, 2));
    CHECK(is_rl_k_min({3, 2, 1}, 1, 3));
    CHECK(is_rl_k_min({2, 5, 6, 3, 1, 7, 4, 8}, 4, 5));
    CHECK(is_rl_k_min({2, 5, 6, 3, 1, 7, 4, 8}, 4, 2));
    CHECK_FALSE(is_rl_k_min({2, 5, 6, 3, 1, 7, 4, 8}, 4, 1));
    CHECK_THROWS_AS(is_rl_k_min({1, 2}, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(is_rl_k_min({1, 2}, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(is_rl_k_min({1, 2}, 1, 0), std::invalid_argument);
}

TEST_CASE("prefix statistic") {
    // Prefix equal to {1..m} forces the maximal value m.
    CHECK(c_statistic({1, 2, 3, 5, 4}, 3) == 3);
    CHECK(c_statistic({2, 1, 3, 5, 4}, 3) == 3);
    // Decreasing permutation with a short prefix scores zero.
    CHECK(c_statistic({6, 5, 4, 3, 2, 1}, 3) == 0);
    CHECK(c_statistic({5, 4, 3, 2, 1}, 2) == 0);
    // Empty prefix.
    CHECK(c_statistic({3, 1, 2}, 0) == 0);
    CHECK_THROWS_AS(c_statistic({1, 2, 3}, 3), std::invalid_argument);
}

TEST_CASE("stirling numbers of the first kind") {
    CHECK(stirling_first(0, 0) == 1);
    CHECK(stirling_first(3, 1) == 2);
    CHECK(stirling_first(3, 2) == 3);
    CHECK(stirling_first(3, 3) == 1);
    CHECK(stirling_first(5, 2) == 50);
    CHECK(stirling_first(4, 5) == 0);
    for (int s = 1; s <= 8; ++s) {
        BigInt row_sum = 0;
        for (int t = 0; t <= s; ++t) row_sum += stirling_first(s, t);
        CHECK(row_sum == factorial(s));
    }
}

TEST_CASE("profile closed form") {
    StatProfile p22 = stat_profile_formula(2, 2);
    CHECK(p22.counts == std::vector<BigInt>{4, 12, 8});
    StatProfile p23 = stat_profile_formula(2, 3);
    CHECK(p23.counts == std::vector<BigInt>{12, 54, 54});
    CHECK(p23.total() == 120);
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n)
            CHECK(stat_profile_formula(m, n).counts[0] == factorial(m) * factorial(n));
}

TEST_CASE("profile brute force equals closed form") {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; m + n <= 7; ++n) {
            CHECK(stat_profile_bruteforce(m, n).counts == stat_profile_formula(m, n).counts);
        }
    CHECK_THROWS_AS(stat_profile_bruteforce(6, 6), GuardError);
}

TEST_CASE("profile recurrence") {
    for (int m = 2; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n) {
            StatProfile big = stat_profile_formula(m, n);
            StatProfile small = stat_profile_formula(m - 1, n);
            for (int k = 1; k < m; ++k)
                CHECK(BigInt(m) * small.counts[k] + BigInt(n) * small.counts[k - 1] ==
                      big.counts[k]);
        }
}

TEST_CASE("the two type implementations agree") {
    for (int m = 2; m <= 6; ++m)
        for (int n = 2; m + n <= 8; ++n) {
            DtdContext ctx(m, n);
            bool agree = true;
            for_each_permutation(m + n, [&](const Permutation& pi) {
                if (ctx.type_by_jdt(pi) != type_by_parity(m, n, pi)) agree = false;
            });
            CHECK(agree);
        }
    // Identity permutation scores c = m, so the swap count is even.
    CHECK(type_of(3, 2, identity_permutation(5)) == +1);
}

TEST_CASE("theorem difference formula and brute force") {
    CHECK(theorem_difference(3, 2) == 0);
    CHECK(theorem_difference(2, 3) == 12);
    CHECK(theorem_difference(2, 4) == 144);
    CHECK(theorem_difference(3, 4) == -144);  // odd m flips the sign
    CHECK(theorem_difference(3, 5) == -binomial(4, 3) * factorial(3) * factorial(5));

    auto [s1, s2] = s_counts_bruteforce(2, 3);
    CHECK(s1 == 66);
    CHECK(s2 == 54);
    CHECK(s1 - s2 == theorem_difference(2, 3));

    auto [t1, t2] = s_counts_bruteforce(2, 4);
    CHECK(t1 - t2 == 144);
    CHECK(t1 + t2 == 720);

    // Alternating sum of the profile gives the same difference.
    StatProfile profile = stat_profile_formula(2, 4);
    BigInt alternating = 0;
    for (int k = 0; k <= 2; ++k)
        alternating += (k % 2 == 0 ? profile.counts[k] : -profile.counts[k]);
    CHECK(alternating == 144);

    CHECK_THROWS_AS(s_counts_bruteforce(6, 6), GuardError);
}

TEST_CASE("reduction facts visible in the run") {
    for (auto [m, n] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{3, 3}}) {
        DtdContext ctx(m, n);
        for_each_permutation(m + n, [&, m = m, n = n](const Permutation& pi) {
            // After n rounds the bottom tail is sorted: the first-row pair box
            // still holds pi_m and the second-row box the suffix minimum.
            auto [x_n, y_n] = ctx.pair_labels_after(pi, n);
            CHECK(x_n == pi[m - 1]);
            CHECK(y_n == *std::min_element(pi.begin() + m, pi.end()));

            // One more round: the order flips unless pi_m is the suffix minimum.
            auto [x_n1, y_n1] = ctx.pair_labels_after(pi, n + 1);
            const bool rl_min = pi[m - 1] == *std::min_element(pi.begin() + m - 1, pi.end());
            CHECK((x_n1 < y_n1) == rl_min);
        });
    }
}

TEST_CASE("pair comparison depends only on the suffix pattern") {
    for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}, std::pair{2, 4},
                        std::pair{4, 2}, std::pair{3, 3}, std::pair{2, 5}, std::pair{5, 2},
                        std::pair{3, 4}, std::pair{4, 3}}) {
        DtdContext ctx(m, n);
        for (int i = n + 1; i <= n + m; ++i) {
            std::map<std::vector<int>, bool> outcome_by_pattern;
            bool consistent = true;
            for_each_permutation(m + n, [&, i = i](const Permutation& pi) {
                auto [x, y] = ctx.pair_labels_after(pi, i);
                auto [it, inserted] = outcome_by_pattern.try_emplace(suffix_pattern(pi, i), x < y);
                if (!inserted && it->second != (x < y)) consistent = false;
            });
            CHECK(consistent);
        }
    }
}

TEST_CASE("type depends only on the flag vector") {
    for (auto [m, n] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{2, 4}, std::pair{3, 3}}) {
        DtdContext ctx(m, n);
        std::map<std::vector<int>, int> type_by_flags;
        bool consistent = true;
        for_each_permutation(m + n, [&, m = m](const Permutation& pi) {
            std::vector<int> flags(m);
            for (int i = 1; i <= m; ++i) flags[i - 1] = is_rl_k_min(pi, i, m + 1 - i) ? 1 : 0;
            auto [it, inserted] = type_by_flags.try_emplace(flags, ctx.type_by_jdt(pi));
            if (!inserted && it->second != ctx.type_by_jdt(pi)) consistent = false;
        });
        CHECK(consistent);
    }
}

}  // TEST_SUITE
