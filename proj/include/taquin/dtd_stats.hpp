#pragma once

#include <utility>
#include <vector>

#include "taquin/jdt.hpp"
#include "taquin/poset.hpp"

namespace taquin {

// pi_i is an RL_k-minimum if it is among the k smallest of the suffix
// pi_i, pi_{i+1}, ..., pi_N. Position i is 1-based.
bool is_rl_k_min(const Permutation& pi, int i, int k);

// Sum over i = 1..m of [pi_i is an RL_{m+1-i}-minimum].
int c_statistic(const Permutation& pi, int m);

// Unsigned Stirling numbers of the first kind, memoized exact integers.
BigInt stirling_first(int s, int t);

// counts[k] = #{pi in S_{m+n} : c statistic = m-k}, for k = 0..m.
struct StatProfile {
    int m = 0, n = 0;
    std::vector<BigInt> counts;
    BigInt total() const;
};

StatProfile stat_profile_bruteforce(int m, int n, int jobs = 1, int max_size = 10);
StatProfile stat_profile_formula(int m, int n);  // n^k * stirling1(m+1, k+1) * n!

// Reusable machinery for classifying sorts on the double-tailed diamond:
// type +1 means the run ends with the smaller of the two final labels in the
// first-row box of the incomparable pair (output tableau T1), -1 the other.
class DtdContext {
public:
    DtdContext(int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }
    const Poset& poset() const { return poset_; }
    const ProcessingOrder& order() const { return order_; }

    int type_by_jdt(const Permutation& pi) const;

    // Labels of the two incomparable boxes after `rounds` rounds:
    // (first-row box B_{1,m}, second-row box B_{2,m-1}).
    std::pair<int, int> pair_labels_after(const Permutation& pi, int rounds) const;

private:
    int m_, n_;
    Poset poset_;
    ProcessingOrder order_;
    std::vector<int> round_elem_;
    int row1_box_, row2_box_;
};

// Fast path: type is +1 exactly when m - c_statistic(pi, m) is even.
int type_by_parity(int m, int n, const Permutation& pi);

// Runs both implementations and asserts they agree.
int type_of(int m, int n, const Permutation& pi);

// (-1)^m * binomial(n-1, m) * m! * n!
BigInt theorem_difference(int m, int n);

// Exhaustive sort over S_{m+n}: how many permutations map to each of the two
// dual linear extensions.
std::pair<BigInt, BigInt> s_counts_bruteforce(int m, int n, int jobs = 1, int max_size = 10);

}  // namespace taquin
