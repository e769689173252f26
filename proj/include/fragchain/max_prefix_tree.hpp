#pragma once

#include "fragchain/core.hpp"
#include "fragchain/work_counters.hpp"

namespace fragchain {

/// Navigation record for one cell of the breadth-first array layout.
struct NodeRefs {
    bool is_leaf = false;
    std::int64_t left_child = -1;
    std::int64_t right_child = -1;
    std::int64_t parent = -1;           // -1 at the root
    std::int64_t rightmost_child = -1;  // last leaf under this cell (itself for a leaf)
};

/**
 * Array-encoded complete binary max-tree over per-row chaining scores.
 *
 * Leaves hold the scores of rows 0..leaf_count-1; internal cells cache
 * subtree maxima. Cells are stored breadth-first: internal cells at indices
 * 0..2^h-2, leaves from 2^h-1, where h is the smallest power with
 * leaf_count <= 2^h. Padding leaves past leaf_count stay zero and are never
 * written.
 *
 * The structure serves two regimes. In sweep mode, set_score performs a
 * monotone point update and best_below a strict-prefix max query, both in
 * O(log leaf_count) cell touches; internal cells are kept consistent. In
 * column mode, write_leaf edits leaves directly as the current column of the
 * chaining recurrence and internal cells go stale. rebuild_internal and
 * prefix_max_leaves are the O(leaf_count) sweeps that restore the invariant
 * the other regime needs.
 *
 * Each cell also records which fragment produced its value, so optimal
 * chains can be backtracked without a second pass.
 */
class MaxPrefixTree {
public:
    MaxPrefixTree() = default;
    explicit MaxPrefixTree(Pos leaf_count);

    Pos leaf_count() const { return leaf_count_; }
    int height() const { return height_; }

    // Addressable cells: 2^(height+1) - 1; 0 for an empty tree.
    std::int64_t cell_count() const;

    // Throws std::out_of_range for cells outside [0, cell_count).
    NodeRefs nav(std::int64_t cell) const;

    // Walks from the row's leaf toward the root, overwriting every cell
    // smaller than value and stopping at the first cell that is not.
    void set_score(Pos row, Score value, FragId source = kNoFragment);

    // Max over rows strictly below row; row may equal leaf_count (whole
    // range). {0, kNoFragment} when the prefix is empty.
    BestScore best_below(Pos row) const;

    // Recomputes every internal cell as the max of its children (column
    // mode -> sweep mode).
    void rebuild_internal();

    // Replaces each leaf with the running max of the leaves before it
    // (sweep mode -> column mode); internal cells are left stale.
    void prefix_max_leaves();

    Score leaf(Pos row) const;
    FragId leaf_source(Pos row) const;
    void write_leaf(Pos row, Score value, FragId source);

    BestScore root() const;
    Score cell(std::int64_t index) const;

    void attach_counters(WorkCounters* counters) { counters_ = counters; }

private:
    void check_row(Pos row) const;
    void touch() const;

    Pos leaf_count_ = 0;
    int height_ = 0;
    std::int64_t first_leaf_ = 0;
    std::vector<Score> scores_;
    std::vector<FragId> sources_;
    WorkCounters* counters_ = nullptr;
};

}  // namespace fragchain
