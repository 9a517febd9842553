#pragma once

#include <string>
#include <vector>

#include "taquin/poset.hpp"

namespace taquin {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceOptions {
    int jobs = 1;
    bool include_slow = true;  // the 10! column-wise counterexample census
};

// Runs the full acceptance battery (nine criteria, all exact except the
// sampled chi-square reproduction and the asymptotic trend checks).
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

bool all_passed(const std::vector<CriterionResult>& results);

// Shape generators shared by the battery and the test suites.
std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_up_to(int max_cells);
std::vector<Partition> strict_partitions_up_to(int max_cells);
std::vector<Partition> partitions_with_exact_parts(int n, int k);

}  // namespace taquin
