#include <numeric>

#include <doctest.h>

#include "fragchain/compaction.hpp"
#include "fragchain/oracles.hpp"
#include "support.hpp"

using namespace fragchain;

TEST_SUITE_BEGIN("compaction");

TEST_CASE("select_strategy crossover") {
    CHECK(select_strategy(8, 100) == CompactionStrategy::Sort);    // 8*3 = 24 <= 100
    CHECK(select_strategy(64, 100) == CompactionStrategy::Bucket); // 64*6 = 384 > 100
    CHECK(select_strategy(0, 0) == CompactionStrategy::Sort);
    CHECK(select_strategy(1, 0) == CompactionStrategy::Sort);
}

TEST_CASE("canonical example compacts to 5 x 6") {
    const CompactInstance comp = compact(fragtest::canonical_example());
    CHECK(comp.n_prime() == 5);
    CHECK(comp.m_prime() == 6);
    CHECK(comp.t_original == std::vector<Pos>{0, 2, 4, 6, 8});
    CHECK(comp.u_original == std::vector<Pos>{1, 3, 4, 6, 7, 9});
    CHECK(comp.inner.fragments == std::vector<Fragment>{
                                      {0, 1, 0, 1, 4},
                                      {1, 2, 2, 3, 2},
                                      {3, 4, 4, 5, 3},
                                  });
}

TEST_CASE("already compact instances map to themselves") {
    const Instance inst{3, 2, {{0, 1, 0, 0, 2}, {2, 2, 1, 1, 5}}};
    const CompactInstance comp = compact(inst);
    CHECK(comp.inner == inst);
    std::vector<Pos> identity_t(3);
    std::iota(identity_t.begin(), identity_t.end(), 0);
    CHECK(comp.t_original == identity_t);
    CHECK(comp.u_original == std::vector<Pos>{0, 1});
}

TEST_CASE("empty instance compacts to the degenerate instance") {
    const CompactInstance comp = compact(Instance{50, 50, {}});
    CHECK(comp.n_prime() == 0);
    CHECK(comp.m_prime() == 0);
    CHECK(comp.t_original.empty());
    CHECK(comp.u_original.empty());
}

TEST_CASE("both strategies produce identical output") {
    SplitMix64 rng(0x51CA);
    for (int i = 0; i < 200; ++i) {
        const Instance inst = fragtest::random_instance(rng, 120, 120, 48);
        CAPTURE(i);
        const CompactInstance sorted = compact_forced(inst, CompactionStrategy::Sort);
        const CompactInstance bucketed = compact_forced(inst, CompactionStrategy::Bucket);
        REQUIRE(sorted == bucketed);
        REQUIRE(compact(inst) == sorted);
    }
}

TEST_CASE("compaction is idempotent and respects the size bounds") {
    SplitMix64 rng(0x1D3);
    for (int i = 0; i < 150; ++i) {
        const Instance inst = fragtest::random_instance(rng);
        CAPTURE(i);
        const CompactInstance comp = compact(inst);
        const Pos k2 = 2 * static_cast<Pos>(inst.k());
        REQUIRE(comp.n_prime() <= std::min(inst.n, k2));
        REQUIRE(comp.m_prime() <= std::min(inst.m, k2));

        const CompactInstance again = compact(comp.inner);
        REQUIRE(again.inner == comp.inner);
        for (Pos p = 0; p < again.n_prime(); ++p) REQUIRE(again.to_original_t(p) == p);
        for (Pos p = 0; p < again.m_prime(); ++p) REQUIRE(again.to_original_u(p) == p);
    }
}

TEST_CASE("compaction preserves the optimal chain score") {
    SplitMix64 rng(0xACE5);
    for (int i = 0; i < 150; ++i) {
        const Instance inst = fragtest::random_instance(rng);
        CAPTURE(i);
        REQUIRE(oracle_quadratic(compact(inst).inner) == oracle_quadratic(inst));
    }
}

TEST_CASE("coordinate maps compose to the identity") {
    SplitMix64 rng(0xFACE);
    const Instance inst = fragtest::random_instance(rng, 200, 200, 30);
    const CompactInstance comp = compact(inst);
    for (std::size_t i = 1; i < comp.t_original.size(); ++i) {
        REQUIRE(comp.t_original[i - 1] < comp.t_original[i]);
    }
    for (std::size_t i = 1; i < comp.u_original.size(); ++i) {
        REQUIRE(comp.u_original[i - 1] < comp.u_original[i]);
    }
    for (Pos p = 0; p < comp.n_prime(); ++p) {
        REQUIRE(comp.to_compact_t(comp.to_original_t(p)) == p);
    }
    for (Pos p = 0; p < comp.m_prime(); ++p) {
        REQUIRE(comp.to_compact_u(comp.to_original_u(p)) == p);
    }
    // positions without a border have no compact image
    int gaps = 0;
    for (Pos p = 0; p < inst.n; ++p) {
        if (!comp.to_compact_t(p).has_value()) ++gaps;
    }
    CHECK(gaps == inst.n - comp.n_prime());
}

TEST_SUITE_END();
