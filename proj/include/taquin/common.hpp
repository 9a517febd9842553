#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace taquin {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// One-line permutation of {1..n}: pi[i] is the value at position i+1.
using Permutation = std::vector<int>;

// Bijective labeling of poset elements: labels[v] in {1..n} for element id v.
using Labeling = std::vector<int>;

// Thrown when an operation is asked to exceed its configured brute-force bound.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

// (2n)!! = 2^n n!,  (2n-1)!! = (2n)!/(2^n n!),  (-1)!! = 0!! = 1.
inline BigInt double_factorial(int n) {
    if (n <= 0) return 1;
    BigInt r = 1;
    for (int i = n; i >= 2; i -= 2) r *= i;
    return r;
}

inline bool is_permutation_one_line(const Permutation& pi) {
    const int n = static_cast<int>(pi.size());
    std::vector<bool> seen(n + 1, false);
    for (int v : pi) {
        if (v < 1 || v > n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

inline Permutation identity_permutation(int n) {
    Permutation pi(n);
    std::iota(pi.begin(), pi.end(), 1);
    return pi;
}

// Visits all n! one-line permutations in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);

// Splits S_n by first entry and processes the blocks on `jobs` threads.
// `fn(pi)` must only touch the per-thread state selected by `thread_index`;
// results must be merged commutatively by the caller.
void for_each_permutation_parallel(int n, int jobs,
                                   const std::function<void(int thread_index, const Permutation&)>& fn);

std::string join_ints(const std::vector<int>& values, char sep = ',');
std::vector<int> parse_int_list(const std::string& text, char sep = ',');

}  // namespace taquin
