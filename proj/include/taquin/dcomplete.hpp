#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "taquin/poset.hpp"

namespace taquin {

// Generalized hook lengths, indexed by element id.
using HookAssignment = std::vector<int>;

// Truncated series coefficients a_0..a_D, exact integers.
using SeriesCoefficients = std::vector<BigInt>;

// A d_k-interval [w,z] is an interval isomorphic to D_{k-1,k-1}.
struct DkTop {
    int w = -1;
    int k = 0;
    bool multiple = false;  // more than one d-interval has this top
};

// A d_k^- interval: [w,y] isomorphic to D_{k-2,k-1}. For k = 3 this
// degenerates to a diamond with the top removed, i.e. an element w with two
// incomparable upper covers; then `top` is empty.
struct DkMinusInterval {
    int w = -1;
    std::optional<int> top;
    std::pair<int, int> incomparable{-1, -1};
};

struct DCompleteViolation {
    int condition = 0;  // 1, 2 or 3
    int k = 0;
    int w = -1;
    // Condition 1: y = top of the uncompletable d_k^- interval (one of the two
    // covers for k = 3). Condition 2: y = the element covered by z outside
    // [w,z]. Condition 3: y = the second bottom w' with [w',z] a d_k-interval.
    std::optional<int> y;
    std::optional<int> z;  // top of the offending d_k interval (conditions 2, 3)
    std::string detail;
};

struct DCompletenessVerdict {
    bool is_d_complete = false;
    std::optional<DCompleteViolation> violation;
};

// The d_k-interval with top z, if any; when several exist (a condition (3)
// violation) the one with the smallest w is returned with `multiple` set.
std::optional<DkTop> dk_interval_at_top(const Poset& p, int z);

std::vector<DkMinusInterval> dk_minus_intervals(const Poset& p, int k);

// Checks conditions (1)-(3) for k = 3 up to longest chain + 1; the first
// violation (smallest k, condition order 1,2,3, then witness ids) is reported.
DCompletenessVerdict is_d_complete(const Poset& p);

// Hook assignment for a d-complete poset: minimal elements get 1, a top z of a
// d_k-interval [w,z] gets h_l + h_r - h_w, and every other element gets the
// size of its down-set. Throws std::invalid_argument if p is not d-complete.
HookAssignment hook_lengths(const Poset& p);
// Same, processing elements in the given linear-extension order (the result
// must not depend on the choice; exposed so tests can assert that).
HookAssignment hook_lengths(const Poset& p, const Labeling& order);

// |P|! / prod h(z); asserts exact divisibility.
BigInt hook_count(const Poset& p);

// Number of order-reversing maps P -> N with value sum n, for n = 0..max_degree,
// by exhaustive enumeration. Guarded: |P| <= 8 and max_degree <= 14.
SeriesCoefficients p_partition_counts(const Poset& p, int max_degree);

// Coefficients of prod_z 1/(1 - x^{h_z}) up to max_degree.
SeriesCoefficients hook_series_coefficients(const HookAssignment& hooks, int max_degree);

}  // namespace taquin
