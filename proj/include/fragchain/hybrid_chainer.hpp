#pragma once

#include <vector>

#include "fragchain/compaction.hpp"
#include "fragchain/core.hpp"
#include "fragchain/work_counters.hpp"

namespace fragchain {

enum class ColumnMode : std::uint8_t { Dp, Ls };

/// Per-column border densities over the compact first sequence and the
/// processing mode each column gets: Dp when the density exceeds
/// m' / (log2 m' - 1), Ls otherwise. For m' <= 2 the threshold is
/// undefined/non-positive, so every column runs Dp.
struct DensityPlan {
    std::vector<std::int64_t> densities;  // borders per compact column; sums to 2k
    std::vector<ColumnMode> modes;
    double threshold = 0.0;
};

DensityPlan classify_columns(const CompactInstance& compact);

enum class ForceMode { Auto, AllDp, AllLs };

struct HybridResult {
    Score score = 0;
    ScoreTable table;
    DensityPlan plan;  // modes as actually used (after any override)
    WorkCounters counters;
    CompactInstance compacted;
    std::uint64_t events_processed = 0;
};

// Compacts, classifies columns by border density, then processes each
// compact column with either the recurrence (Dp) or point-update/prefix-max
// events (Ls) over one shared max-prefix tree, running a conversion sweep at
// every mode switch. force overrides the plan for differential testing.
HybridResult chain_score_hybrid(const Instance& inst, ForceMode force = ForceMode::Auto);

// Same, with a caller-supplied mode array (size n') replacing the plan. Any
// mode array yields the optimal score; the plan only affects cost.
HybridResult chain_score_hybrid(const Instance& inst, std::vector<ColumnMode> modes);

}  // namespace fragchain
