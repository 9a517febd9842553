#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "taquin/common.hpp"

namespace taquin {

// The permutation chi_{n,t} of [2n]: sends t to 2n+1-t and shifts the values
// in between by one so that it is order-preserving away from t.
Permutation chi(int n, int t);

// The unique order-preserving bijection A -> B (|A| = |B|).
std::map<int, int> order_bijection(const std::vector<int>& a, const std::vector<int>& b);

struct PhiResult {
    bool exceptional = false;
    Permutation mapped;           // valid iff !exceptional
    std::vector<int> witness;     // exceptional case: the positions i with pi_i > 2(m+1-i)
};

// The three-case type-inverting involution on S_{m+n}; permutations with
// pi_i > 2(m+1-i) for every i <= m (possible only when m < n) are exceptional
// and excluded.
PhiResult phi(int m, int n, const Permutation& pi);

// Case m < n: the minimal k with pi_k <= 2(m+1-k), empty when exceptional.
std::optional<int> phi_k_index(int m, int n, const Permutation& pi);
// Case m > n: t = sigma_{A,B}(pi_{m-n+1}) where A is the set of the last 2n
// entries and B = [2n].
int phi_t_value(int m, int n, const Permutation& pi);
// Case m > n: the set A of the last 2n entries, sorted.
std::vector<int> phi_entry_window(int m, int n, const Permutation& pi);

// (n-m)(n-m+1)...(n-1) * n! = binomial(n-1, m) * m! * n!  (zero when m >= n).
BigInt exceptional_count(int m, int n);
std::vector<Permutation> enumerate_exceptional(int m, int n, int max_size = 10);

struct InvolutionReport {
    int m = 0, n = 0;
    BigInt total;
    BigInt exceptional_found;
    BigInt expected_exceptional;
    bool involutive = true;        // phi(phi(pi)) == pi off the exceptional set
    bool type_inverting = true;    // tau(phi(pi)) == -tau(pi) off the exceptional set
    bool exceptional_one_type = true;
    int exceptional_type = 0;      // +1/-1 when the exceptional set is nonempty
    bool count_matches = true;
    bool bookkeeping_ok = true;    // k preserved (m<n); t -> 2n+1-t and A preserved (m>n)
    bool sign_consistent = true;   // s1-s2 == exceptional_type * |E|
    std::vector<std::string> failures;
    bool pass() const;
};

// Exhaustive verification over S_{m+n} (guarded).
InvolutionReport verify_involution(int m, int n, int jobs = 1, int max_size = 8);

}  // namespace taquin
