#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "taquin/poset.hpp"

namespace taquin {

// A linear extension used as the processing order of the sort.
using ProcessingOrder = Labeling;

struct JdtRound {
    int element = -1;                          // the element processed this round
    std::vector<std::pair<int, int>> swaps;    // (from, to): label moved down a cover
};

struct JdtTrace {
    std::vector<JdtRound> rounds;
    bool empty() const;
};

// One full run of the sort: n rounds, round i bubbles the label sitting at
// sigma^{-1}(i) down along covers while a lower cover holds a smaller label.
// The result is always a dual linear extension.
Labeling jdt_sort(const Poset& p, const ProcessingOrder& sigma, const Labeling& start,
                  JdtTrace* trace = nullptr);

// A single sorting round starting at element x, mutating labels in place.
void jdt_round(const Poset& p, Labeling& labels, int x);

// Same, invoking `snapshot(round, labels)` after each round (round = 1..n).
Labeling jdt_sort_with_snapshots(const Poset& p, const ProcessingOrder& sigma, const Labeling& start,
                                 const std::function<void(int, const Labeling&)>& snapshot);

// Initial labeling from a one-line permutation: the element with sigma-value j
// receives pi_{n+1-j}.
Labeling labeling_from_permutation(const Poset& p, const ProcessingOrder& sigma, const Permutation& pi);

// Columns right-to-left, within a column bottom-to-top.
ProcessingOrder order_column_wise(const Poset& p);
// Rows bottom-to-top, within a row right-to-left.
ProcessingOrder order_row_wise(const Poset& p);
// The canonical double-tailed diamond order: up the bottom tail, then the two
// incomparable boxes (second row first), then up the top chain.
ProcessingOrder order_dtd(const Poset& p);

struct DistributionReport {
    bool exhaustive = true;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    BigInt ensemble_size;
    std::vector<Labeling> classes;  // every dual linear extension, enumeration order
    std::vector<BigInt> counts;     // parallel to classes
    bool uniform = false;           // exhaustive runs only
    BigRat expected_per_class;      // exhaustive runs only: n!/f^P
    double chi_square = 0.0;        // sampled runs only
    double p_value = 1.0;           // sampled runs only
    BigInt total() const;
};

// Runs the sort on every labeling of the n! permutations (lexicographic
// order; blocks by first entry when jobs > 1, with commutative merging).
DistributionReport distribution_exhaustive(const Poset& p, const ProcessingOrder& sigma,
                                           int max_exhaustive_n = 11, int jobs = 1);

// Deterministic sampled census; the uniform verdict is replaced by a
// chi-square statistic against the uniform null.
DistributionReport distribution_sampled(const Poset& p, const ProcessingOrder& sigma,
                                        std::uint64_t samples, std::uint64_t seed);

}  // namespace taquin
