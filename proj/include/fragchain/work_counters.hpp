#pragma once

#include <cstdint>

namespace fragchain {

/// Machine-independent operation counts. Wall time at desk scale is noisy;
/// these are the primary cost signal reported by the chainers and the bench.
struct WorkCounters {
    std::uint64_t leaf_writes = 0;        // direct leaf writes from DP-mode columns
    std::uint64_t tree_cell_touches = 0;  // cells visited by tree walks and conversion sweeps
    std::uint64_t conversion_sweeps = 0;  // DP<->LS consistency sweeps
    std::uint64_t dp_cell_updates = 0;    // recurrence cell evaluations
    std::uint64_t staircase_ops = 0;      // ordered-map queries, inserts and erases

    void reset() { *this = {}; }
};

}  // namespace fragchain
