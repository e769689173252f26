#pragma once

#include <vector>

#include "fragchain/core.hpp"
#include "fragchain/generators.hpp"

namespace fragtest {

using namespace fragchain;

// Three fragments over 10x10 sequences. Fragments 0 and 1 touch on the first
// axis, so the valid chains are exactly {0}, {1}, {2}, {0,2}, {1,2}; the
// optimum is {0,2} with score 7.
inline Instance canonical_example() {
    Instance inst;
    inst.n = 10;
    inst.m = 10;
    inst.fragments = {
        {0, 2, 1, 3, 4},
        {2, 4, 4, 6, 2},
        {6, 8, 7, 9, 3},
    };
    return inst;
}

inline Instance random_instance(SplitMix64& rng, Pos max_n = 60, Pos max_m = 60, FragId max_k = 40) {
    GenSpec spec;
    spec.seed = rng.next();
    spec.n = 1 + static_cast<Pos>(rng.below(static_cast<std::uint64_t>(max_n)));
    spec.m = 1 + static_cast<Pos>(rng.below(static_cast<std::uint64_t>(max_m)));
    spec.k = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(max_k) + 1));
    spec.max_len = 1 + static_cast<Pos>(rng.below(8));
    spec.max_score = 10;
    return generate(spec);
}

}  // namespace fragtest
