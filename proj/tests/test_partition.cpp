#include <doctest.h>

#include <functional>

#include "gdd/partition.hpp"

using namespace gdd;

TEST_CASE("residue tuple reduction") {
    ResidueTuple h(5, {1, 1, -1, -1});
    CHECK(h.values() == std::vector<int64_t>{1, 1, 4, 4});
    CHECK(h.sum_mod_p() == 0);
    CHECK_THROWS_AS(ResidueTuple(3, {1, 0}), Error);
    CHECK_THROWS_AS(ResidueTuple(3, {1, 3}), Error); // 3 = 0 mod 3
}

TEST_CASE("adapted and maximal") {
    ResidueTuple h(3, {1, 1, 1, 2, 2, 2});
    Partition whole{{{0, 1, 2, 3, 4, 5}}};
    CHECK(is_adapted(h, whole));
    CHECK(!is_maximal(h, whole)); // splits into {0,1,2} / {3,4,5}

    Partition split{{{0, 1, 2}, {3, 4, 5}}};
    CHECK(is_adapted(h, split));
    CHECK(is_maximal(h, split));

    Partition mixed{{{0, 3}, {1, 4}, {2, 5}}};
    CHECK(is_adapted(h, mixed)); // each block sums to 3 = 0
    CHECK(is_maximal(h, mixed));

    Partition bad{{{0, 1}, {2, 3, 4, 5}}};
    CHECK(!is_adapted(h, bad));

    Partition not_cover{{{0, 1, 2}}};
    CHECK(!is_adapted(h, not_cover));
}

TEST_CASE("partition condition spec examples") {
    // the classic p = 5 counterexample
    CHECK(!partition_condition(ResidueTuple(5, {1, 1, -1, -1})));
    // p = 3 examples
    CHECK(partition_condition(ResidueTuple(3, {1, 1, 1})));
    CHECK(partition_condition(ResidueTuple(3, {1, 1, 1, 2, 2, 2})));
    // precondition
    CHECK_THROWS_AS(partition_condition(ResidueTuple(3, {1, 1})), Error);
    // cap
    CHECK_THROWS_AS(partition_condition(ResidueTuple(3, std::vector<int64_t>(15, 1)), 12), Error);
}

TEST_CASE("partition condition always holds at p = 3 (exhaustive to 12)") {
    for (int n = 1; n <= 12; ++n) {
        for (uint32_t bits = 0; bits < (1u << n); ++bits) {
            std::vector<int64_t> h;
            int64_t sum = 0;
            for (int i = 0; i < n; ++i) {
                int64_t v = (bits >> i & 1) ? 1 : 2;
                h.push_back(v);
                sum += v;
            }
            if (sum % 3 != 0) continue;
            CHECK(partition_condition(ResidueTuple(3, h)));
        }
    }
}

TEST_CASE("enumerate_maximal lists exactly the maximal adapted partitions") {
    ResidueTuple h(3, {1, 1, 1, 2, 2, 2});
    auto all = enumerate_maximal(h);
    for (const auto& P : all) CHECK(is_maximal(h, P));
    // {1,2} pairs: 3x3 = 9 pairings of a one-index with a two-index... the
    // maximal partitions are: {0,1,2}+{3,4,5}, and all 6 full matchings into
    // three {1,2} pairs, and mixed covers do not exist (a triple of 1s plus
    // pairs would leave an unmatched triple of 2s which is fine):
    //   {0,1,2} with {3,4,5}: 1
    //   three disjoint pairs (perfect matchings 0..2 -> 3..5): 3! = 6
    CHECK(all.size() == 7);
}

TEST_CASE("block structure") {
    auto b = block_structure(ResidueTuple(3, {1, 2, 1, 2, 1, 2}));
    REQUIRE(b.has_value());
    REQUIRE(b->blocks.size() == 2);
    // blocks group equal residues
    CHECK(b->blocks[0] == std::vector<size_t>{0, 2, 4});
    CHECK(b->blocks[1] == std::vector<size_t>{1, 3, 5});

    CHECK(!block_structure(ResidueTuple(5, {1, 1, 1, 3, 4})).has_value());

    auto single = block_structure(ResidueTuple(3, {1, 1, 1}));
    REQUIRE(single.has_value());
    CHECK(single->blocks.size() == 1);

    CHECK_THROWS_AS(block_structure(ResidueTuple(3, {1, 2})), Error);
}

TEST_CASE("condition <=> constant blocks when |h| = lambda p") {
    auto exhaustive = [](int64_t p, int n) {
        std::vector<int64_t> h(static_cast<size_t>(n), 1);
        std::function<void(int)> rec = [&](int i) {
            if (i == n) {
                ResidueTuple t(p, h);
                if (t.sum_mod_p() != 0) return;
                bool cond = partition_condition(t);
                bool blocks = block_structure(t).has_value();
                CHECK(cond == blocks);
                return;
            }
            for (int64_t v = 1; v < p; ++v) {
                h[static_cast<size_t>(i)] = v;
                rec(i + 1);
            }
        };
        rec(0);
    };
    exhaustive(3, 6);
    exhaustive(3, 9);
    exhaustive(5, 5);
}
