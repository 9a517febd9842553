#pragma once

#include <string>
#include <vector>

#include "taquin/poset.hpp"

namespace taquin {

// A standard Young tableau as rows of entries.
using SytRows = std::vector<std::vector<int>>;

// Enumerates all standard Young tableaux of the shape (guarded: |shape| <= 10).
void for_each_syt(const Partition& shape, const std::function<void(const SytRows&)>& visit,
                  int max_cells = 10);
BigInt syt_count_bruteforce(const Partition& shape, int max_cells = 10);

// Classical hooks (arm + leg + 1), one per cell in row-major order; the order
// matches the element ids of young(shape).
std::vector<int> young_hooks(const Partition& shape);
BigInt syt_count_hook(const Partition& shape);  // n! / prod hooks

// Shifted hooks for a strict shape: the classical hook within the shifted
// diagram, extended by row j+1 whenever column j ends on the diagonal.
// Row-major, matching element ids of shifted_young(shape).
std::vector<int> shifted_hooks(const Partition& shape);
BigInt shifted_count_hook(const Partition& shape);

// Number of standard fillings of the inset built from a k-part shape:
// (n+k)! / (prod of shape hooks * prod_{i=1..k} (n - lambda_i + i)).
BigInt inset_count(int k, const Partition& shape);

// Census of inset standard fillings by the left-most second-row entry, which
// is always k+i for some i in 0..lambda_1. Verifies along the way that the
// first k-1 entries of the first row are forced to 1..k-1.
std::vector<BigInt> refined_counts(int k, const Partition& shape, int max_cells = 14);

// Expected left-most entry of the second row of a uniform random standard
// Young tableau. Shapes need at least two rows.
BigRat expectation_closed_form(const Partition& shape);  // prod (n+i)/(n+i-lambda_i)
BigRat expectation_bruteforce(const Partition& shape, int max_cells = 10);

struct ExpectationReport {
    Partition shape;
    BigInt f_shape;               // standard Young tableaux of the shape
    BigInt f_inset;               // standard fillings of the corresponding inset
    std::vector<BigInt> refined;  // optional: refined counts by second-row leader
    BigRat expectation;
};
ExpectationReport expectation_report(const Partition& shape, bool with_refined = false);

struct FamilyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Closed-form checks for the three shape families: hooks (3 - 1/k),
// rectangles (approaching (1+1/c)^c), staircases (double factorials, trending
// to e).
std::vector<FamilyCheck> family_checks();

}  // namespace taquin
