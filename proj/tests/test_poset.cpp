#include <doctest.h>

#include <algorithm>
#include <set>

#include "taquin/acceptance.hpp"
#include "taquin/poset.hpp"
#include "taquin/tableaux.hpp"

using namespace taquin;

TEST_SUITE("poset") {

TEST_CASE("partition validation and parsing") {
    CHECK(Partition::parse("3,3,2,1").sum() == 9);
    CHECK(Partition::parse("5,4,2,1").is_strict());
    CHECK_FALSE(Partition::parse("2,2").is_strict());
    CHECK_THROWS_AS(Partition(std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({1, 0}), std::invalid_argument);
    CHECK(Partition({4, 2, 1}).to_string() == "4,2,1");
}

TEST_CASE("from_covers validates") {
    CHECK(Poset::from_covers(1, {}).size() == 1);

    // Four-element diamond.
    Poset d = Poset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(d.less(0, 3));
    CHECK(d.incomparable(1, 2));
    auto shape = classify_double_tailed(d);
    REQUIRE(shape.has_value());
    CHECK(*shape == std::make_pair(2, 2));

    CHECK_THROWS_AS(Poset::from_covers(3, {{0, 1}, {1, 2}, {0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Poset::from_covers(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Poset::from_covers(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Poset::from_covers(2, {{0, 1}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Poset::from_covers(0, {}), std::invalid_argument);
}

TEST_CASE("young posets") {
    CHECK(young(Partition({1})).size() == 1);

    Poset p = young(Partition({2, 1}));
    REQUIRE(p.size() == 3);
    const int top = *p.element_at(1, 1);
    const int right = *p.element_at(1, 2);
    const int below = *p.element_at(2, 1);
    CHECK(p.incomparable(right, below));
    CHECK(p.less(right, top));
    CHECK(p.less(below, top));
    CHECK(p.name(top) == "B_{1,1}");

    Poset big = young(Partition({3, 3, 2, 1}));
    CHECK(big.size() == 9);
    CHECK(big.maximal_elements() == std::vector<int>{*big.element_at(1, 1)});
}

TEST_CASE("shifted young posets") {
    // Shape (2,1) occupies (1,1),(1,2),(2,2); its covers force a 3-chain.
    Poset p = shifted_young(Partition({2, 1}));
    REQUIRE(p.size() == 3);
    CHECK(p.element_at(1, 1).has_value());
    CHECK(p.element_at(1, 2).has_value());
    CHECK(p.element_at(2, 2).has_value());
    CHECK(p.incomparable_pairs().empty());
    CHECK(count_dual_linear_extensions(p) == 1);

    CHECK(shifted_young(Partition({5, 4, 2, 1})).size() == 12);
    CHECK_THROWS_AS(shifted_young(Partition({2, 2})), std::invalid_argument);
}

TEST_CASE("double-tailed diamonds") {
    Poset d22 = double_tailed_diamond(2, 2);
    CHECK(d22.size() == 4);
    CHECK(classify_double_tailed(d22) == std::make_pair(2, 2));

    Poset d65 = double_tailed_diamond(6, 5);
    CHECK(d65.size() == 11);
    CHECK(d65.element_at(1, 6).has_value());
    CHECK(d65.element_at(2, 5).has_value());
    CHECK(d65.element_at(2, 9).has_value());
    CHECK_FALSE(d65.element_at(2, 4).has_value());
    CHECK(d65.name(*d65.element_at(1, 1)) == "B_{1,1}");

    for (int m = 2; m <= 6; ++m)
        for (int n = 2; n <= 6; ++n) {
            Poset d = double_tailed_diamond(m, n);
            CHECK(d.incomparable_pairs().size() == 1);
            CHECK(classify_double_tailed(d) == std::make_pair(m, n));
            CHECK(count_dual_linear_extensions(d) == 2);
        }

    CHECK(count_dual_linear_extensions(double_tailed_diamond(3, 2)) == 2);
    CHECK_THROWS_AS(double_tailed_diamond(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(double_tailed_diamond(2, 1), std::invalid_argument);
}

TEST_CASE("insets") {
    CHECK(inset(4, Partition({3, 2, 2, 1})).size() == 12);
    CHECK(inset(4, Partition({3, 3, 2, 1})).size() == 13);

    Poset small = inset(2, Partition({1, 1}));
    CHECK(small.size() == 4);
    CHECK(classify_double_tailed(small) == std::make_pair(2, 2));

    // The added boxes sit left of column 1: k-1 in row 1 and one in row 2.
    Poset p = inset(3, Partition({2, 1, 1}));
    CHECK(p.element_at(1, -1).has_value());
    CHECK(p.element_at(1, 0).has_value());
    CHECK(p.element_at(2, 0).has_value());
    CHECK(p.maximal_elements() == std::vector<int>{*p.element_at(1, -1)});

    CHECK_THROWS_AS(inset(1, Partition({1})), std::invalid_argument);
    CHECK_THROWS_AS(inset(3, Partition({2, 1})), std::invalid_argument);
}

TEST_CASE("add_maximum") {
    Poset single = Poset::from_covers(1, {});
    Poset two_chain = add_maximum(single);
    CHECK(two_chain.size() == 2);
    CHECK(two_chain.less(0, 1));

    Poset antichain = Poset::from_covers(2, {});
    Poset vee = add_maximum(antichain);
    CHECK(vee.size() == 3);
    CHECK(vee.less(0, 2));
    CHECK(vee.less(1, 2));
    CHECK(vee.incomparable(0, 1));

    for (int m = 2; m <= 5; ++m)
        for (int n = 2; n <= 5; ++n)
            CHECK(classify_double_tailed(add_maximum(double_tailed_diamond(m, n))) ==
                  std::make_pair(m + 1, n));
}

TEST_CASE("covers are a transitive reduction for every family") {
    std::vector<Poset> posets;
    for (const auto& shape : partitions_up_to(6)) posets.push_back(young(shape));
    for (const auto& shape : strict_partitions_up_to(6)) posets.push_back(shifted_young(shape));
    posets.push_back(double_tailed_diamond(3, 4));
    posets.push_back(inset(3, Partition({2, 2, 1})));

    for (const Poset& p : posets) {
        for (std::size_t drop = 0; drop < p.covers().size(); ++drop) {
            std::vector<std::pair<int, int>> covers;
            for (std::size_t i = 0; i < p.covers().size(); ++i)
                if (i != drop) covers.push_back(p.covers()[i]);
            Poset reduced = Poset::from_covers(p.size(), covers);
            auto [a, b] = p.covers()[drop];
            CHECK_FALSE(reduced.less(a, b));
        }
    }
}

TEST_CASE("dual linear extension enumeration") {
    Poset chain = Poset::from_covers(3, {{0, 1}, {1, 2}});
    auto exts = all_dual_linear_extensions(chain);
    REQUIRE(exts.size() == 1);
    CHECK(exts[0] == Labeling{3, 2, 1});

    CHECK(count_dual_linear_extensions(young(Partition({3, 3, 2, 1}))) == 168);

    // Deterministic order, and every output is a dual linear extension.
    Poset p = young(Partition({2, 2, 1}));
    auto once = all_dual_linear_extensions(p);
    auto twice = all_dual_linear_extensions(p);
    CHECK(once == twice);
    std::set<Labeling> distinct(once.begin(), once.end());
    CHECK(distinct.size() == once.size());
    for (const auto& iota : once) CHECK(is_dual_linear_extension(p, iota));

    // Early stop.
    int seen = 0;
    for_each_dual_linear_extension(p, [&](const Labeling&) { return ++seen < 2; });
    CHECK(seen == 2);
}

TEST_CASE("extension counts match independent tableau enumeration") {
    for (const auto& shape : partitions_up_to(8))
        CHECK(count_dual_linear_extensions(young(shape)) == syt_count_bruteforce(shape));
}

TEST_CASE("intervals") {
    Poset d = double_tailed_diamond(4, 3);
    const int w = *d.element_at(2, 4);
    const int z = *d.element_at(1, 3);
    Interval iv = interval(d, w, z);
    CHECK(iv.poset.size() == 4);
    CHECK(classify_double_tailed(iv.poset) == std::make_pair(2, 2));
    for (int local = 0; local < iv.poset.size(); ++local) {
        CHECK(d.leq(w, iv.to_parent[local]));
        CHECK(d.leq(iv.to_parent[local], z));
    }

    Interval self = interval(d, w, w);
    CHECK(self.poset.size() == 1);

    Poset chain = Poset::from_covers(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    Interval sub = interval(chain, 1, 3);
    CHECK(sub.poset.size() == 3);
    CHECK(sub.poset.incomparable_pairs().empty());

    const int pair_box = *d.element_at(1, 4);
    const int other_pair_box = *d.element_at(2, 3);
    CHECK_THROWS_AS(interval(d, pair_box, other_pair_box), std::invalid_argument);
}

TEST_CASE("linear extension helpers") {
    Poset p = young(Partition({2, 2}));
    CHECK(is_linear_extension(p, default_linear_extension(p)));
    CHECK(is_linear_extension(p, alternate_linear_extension(p)));
    CHECK(p.longest_chain() == 3);
    CHECK(p.down_set_size(*p.element_at(1, 1)) == 4);
    CHECK(p.down_set_size(*p.element_at(2, 2)) == 1);
}

}  // TEST_SUITE
