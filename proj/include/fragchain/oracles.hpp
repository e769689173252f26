#pragma once

#include <vector>

#include "fragchain/core.hpp"

namespace fragchain {

// O(k^2) reference chainer over the fragment graph (sort by right border,
// scan all compatible predecessors). Shares no code with the sweep-based
// chainers; used to cross-check them.
Score oracle_quadratic(const Instance& inst);
Chain oracle_quadratic_chain(const Instance& inst);

// Every valid chain, each as its fragment ids sorted by left border.
// Guarded to k <= 20; throws std::invalid_argument beyond that.
std::vector<std::vector<FragId>> enumerate_chains(const Instance& inst);

// Optimal score by subset enumeration. Same k <= 20 guard.
Score oracle_exhaustive(const Instance& inst);
Chain oracle_exhaustive_chain(const Instance& inst);

}  // namespace fragchain
