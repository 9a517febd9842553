#include <doctest.h>

#include <algorithm>
#include <set>

#include "taquin/acceptance.hpp"
#include "taquin/dcomplete.hpp"
#include "taquin/tableaux.hpp"

using namespace taquin;

TEST_SUITE("tableaux") {

TEST_CASE("tableau enumeration and the hook count") {
    CHECK(syt_count_bruteforce(Partition({2, 1})) == 2);
    CHECK(syt_count_bruteforce(Partition({5})) == 1);
    CHECK(syt_count_hook(Partition({3, 3, 2, 1})) == 168);
    for (const auto& shape : partitions_up_to(8))
        CHECK(syt_count_hook(shape) == syt_count_bruteforce(shape));
    CHECK_THROWS_AS(syt_count_bruteforce(Partition({6, 5})), GuardError);
}

TEST_CASE("tableaux are standard") {
    for_each_syt(Partition({3, 2}), [](const SytRows& rows) {
        for (const auto& row : rows) CHECK(std::is_sorted(row.begin(), row.end()));
        for (std::size_t i = 1; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows[i].size(); ++j) CHECK(rows[i - 1][j] < rows[i][j]);
    });
}

TEST_CASE("classical hooks") {
    CHECK(young_hooks(Partition({3, 3, 2, 1})) == std::vector<int>{6, 4, 2, 5, 3, 1, 3, 1, 1});
    CHECK(young_hooks(Partition({4})) == std::vector<int>{4, 3, 2, 1});
}

TEST_CASE("shifted hooks") {
    // Enumeration is the oracle: the shifted (2,1) poset is a chain, so there
    // is exactly one standard filling and the hooks must multiply to 3!.
    CHECK(count_dual_linear_extensions(shifted_young(Partition({2, 1}))) == 1);
    CHECK(shifted_hooks(Partition({2, 1})) == std::vector<int>{3, 2, 1});
    CHECK(shifted_count_hook(Partition({2, 1})) == 1);

    // One-row shapes degenerate to classical hooks.
    CHECK(shifted_hooks(Partition({4})) == young_hooks(Partition({4})));

    for (const auto& shape : strict_partitions_up_to(8))
        CHECK(shifted_count_hook(shape) == count_dual_linear_extensions(shifted_young(shape)));

    CHECK(shifted_count_hook(Partition({5, 4, 2, 1})) ==
          count_dual_linear_extensions(shifted_young(Partition({5, 4, 2, 1}))));

    CHECK_THROWS_AS(shifted_hooks(Partition({2, 2})), std::invalid_argument);
}

TEST_CASE("inset counting formula") {
    CHECK(inset_count(4, Partition({3, 3, 2, 1})) == 429);
    CHECK(inset_count(2, Partition({1, 1})) == 2);
    for (int k = 2; k <= 4; ++k)
        for (int n = k; n + k <= 9; ++n)
            for (const auto& shape : partitions_with_exact_parts(n, k)) {
                CHECK(inset_count(k, shape) == hook_count(inset(k, shape)));
                CHECK(inset_count(k, shape) == count_dual_linear_extensions(inset(k, shape)));
            }
    CHECK_THROWS_AS(inset_count(3, Partition({2, 1})), std::invalid_argument);
}

TEST_CASE("refined counts against a direct tableau census") {
    for (auto [k, parts] : std::vector<std::pair<int, std::vector<int>>>{
             {2, {2, 1}}, {3, {2, 2, 1}}, {2, {3, 2}}, {4, {3, 3, 2, 1}}}) {
        const Partition shape(parts);
        const auto refined = refined_counts(k, shape);
        REQUIRE(static_cast<int>(refined.size()) == shape.parts[0] + 1);

        BigInt total = 0;
        for (const BigInt& c : refined) total += c;
        CHECK(total == inset_count(k, shape));
        CHECK(refined[0] == syt_count_hook(shape));

        // f_i = number of standard tableaux whose second-row leader is >= i+1.
        std::vector<BigInt> tail(shape.parts[0] + 2, 0);
        for_each_syt(shape, [&](const SytRows& rows) {
            for (int i = 0; i <= shape.parts[0]; ++i)
                if (rows[1][0] >= i + 1) ++tail[i];
        });
        for (int i = 0; i <= shape.parts[0]; ++i) CHECK(refined[i] == tail[i]);
    }
    CHECK_THROWS_AS(refined_counts(2, Partition({9, 8})), GuardError);
}

TEST_CASE("expectation of the second-row leader") {
    CHECK(expectation_closed_form(Partition({3, 3, 2, 1})) == BigRat(429, 168));
    CHECK(expectation_closed_form(Partition({2, 1})) == BigRat(5, 2));
    CHECK(expectation_bruteforce(Partition({2, 1})) == BigRat(5, 2));

    // Staircase (3,2,1): 16 tableaux averaging 21/8.
    CHECK(syt_count_bruteforce(Partition({3, 2, 1})) == 16);
    CHECK(expectation_closed_form(Partition({3, 2, 1})) == BigRat(21, 8));
    CHECK(expectation_bruteforce(Partition({3, 2, 1})) == BigRat(21, 8));

    for (const auto& shape : partitions_up_to(7)) {
        if (shape.rows() < 2) continue;
        CHECK(expectation_closed_form(shape) == expectation_bruteforce(shape));
    }

    CHECK_THROWS_AS(expectation_closed_form(Partition({4})), std::invalid_argument);
    CHECK_THROWS_AS(expectation_bruteforce(Partition({4})), std::invalid_argument);
}

TEST_CASE("tail-sum identity out of the refined counts") {
    for (auto [k, parts] :
         std::vector<std::pair<int, std::vector<int>>>{{2, {2, 1}}, {3, {2, 2, 1}}, {2, {3, 2}}}) {
        const Partition shape(parts);
        const auto refined = refined_counts(k, shape);
        BigRat tail_sum = 0;
        const BigInt f = syt_count_hook(shape);
        for (const BigInt& c : refined) tail_sum += BigRat(c, f);
        CHECK(tail_sum == expectation_closed_form(shape));
    }
}

TEST_CASE("expectation report") {
    ExpectationReport report = expectation_report(Partition({3, 3, 2, 1}), true);
    CHECK(report.f_shape == 168);
    CHECK(report.f_inset == 429);
    CHECK(report.expectation == BigRat(429, 168));
    BigInt total = 0;
    for (const BigInt& c : report.refined) total += c;
    CHECK(total == report.f_inset);
    CHECK(report.expectation >= 2);
    CHECK(report.expectation <= report.shape.parts[0] + 1);
}

TEST_CASE("family checks all pass") {
    const auto checks = family_checks();
    CHECK(checks.size() == 11);
    for (const auto& c : checks) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("family values") {
    // c = 1 rectangles are single columns: the leader is always 2.
    for (int k = 2; k <= 6; ++k)
        CHECK(expectation_closed_form(Partition(std::vector<int>(k, 1))) == BigRat(2));
    // Hook family at k = 2.
    CHECK(expectation_closed_form(Partition({2, 1})) == BigRat(3 * 2 - 1, 2));
    // Double factorials as used by the staircase closed form.
    CHECK(double_factorial(9) == 945);
    CHECK(double_factorial(6) == 48);
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(-1) == 1);
}

}  // TEST_SUITE
