#pragma once

#include <functional>

#include "fragchain/core.hpp"
#include "fragchain/work_counters.hpp"

namespace fragchain {

struct DpResult {
    Score score = 0;
    ScoreTable table;
    WorkCounters counters;
    std::uint64_t events_processed = 0;
};

// Called after each finished column with the rolling column cells; the cells
// are non-decreasing along the row axis and never decrease across columns.
using DpColumnObserver = std::function<void(Pos column, std::span<const Score> cells)>;

// Classic O(k + n*m) chainer over a single rolling column. Works on raw or
// compact instances alike; it never compacts.
DpResult chain_score_dp(const Instance& inst);
DpResult chain_score_dp(const Instance& inst, const DpColumnObserver& on_column);

}  // namespace fragchain
