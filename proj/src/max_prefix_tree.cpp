#include "fragchain/max_prefix_tree.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace fragchain {

MaxPrefixTree::MaxPrefixTree(Pos leaf_count) : leaf_count_(leaf_count) {
    if (leaf_count < 0) throw std::invalid_argument("leaf count must be non-negative");
    if (leaf_count == 0) return;
    while ((Pos{1} << height_) < leaf_count) ++height_;
    first_leaf_ = (std::int64_t{1} << height_) - 1;
    scores_.assign(std::size_t{1} << (height_ + 1), 0);
    sources_.assign(scores_.size(), kNoFragment);
}

std::int64_t MaxPrefixTree::cell_count() const {
    return scores_.empty() ? 0 : static_cast<std::int64_t>(scores_.size()) - 1;
}

NodeRefs MaxPrefixTree::nav(std::int64_t cell) const {
    if (cell < 0 || cell >= cell_count()) {
        throw std::out_of_range("cell index " + std::to_string(cell) + " out of range");
    }
    // Depth of the cell and its offset within that level, from the
    // breadth-first layout.
    const int depth = static_cast<int>(std::bit_width(static_cast<std::uint64_t>(cell) + 1)) - 1;
    const std::int64_t offset = cell - (std::int64_t{1} << depth) + 1;

    NodeRefs refs;
    refs.is_leaf = cell >= first_leaf_;
    if (!refs.is_leaf) {
        refs.left_child = (std::int64_t{1} << (depth + 1)) - 1 + 2 * offset;
        refs.right_child = refs.left_child + 1;
    }
    if (cell != 0) {
        refs.parent = (std::int64_t{1} << (depth - 1)) - 1 + offset / 2;
    }
    refs.rightmost_child = first_leaf_ + (offset + 1) * (std::int64_t{1} << (height_ - depth)) - 1;
    return refs;
}

void MaxPrefixTree::check_row(Pos row) const {
    if (row < 0 || row >= leaf_count_) {
        throw std::out_of_range("row " + std::to_string(row) + " out of range");
    }
}

void MaxPrefixTree::touch() const {
    if (counters_) ++counters_->tree_cell_touches;
}

void MaxPrefixTree::set_score(Pos row, Score value, FragId source) {
    check_row(row);
    std::int64_t cell = first_leaf_ + row;
    while (cell != -1) {
        touch();
        if (scores_[static_cast<std::size_t>(cell)] >= value) break;
        scores_[static_cast<std::size_t>(cell)] = value;
        sources_[static_cast<std::size_t>(cell)] = source;
        cell = nav(cell).parent;
    }
}

BestScore MaxPrefixTree::best_below(Pos row) const {
    if (row < 0 || row > leaf_count_) {
        throw std::out_of_range("row " + std::to_string(row) + " out of range");
    }
    if (leaf_count_ == 0 || row == 0) return {};
    if (row == leaf_count_) {
        touch();
        return {scores_[0], sources_[0]};  // padding leaves are zero, the root covers all rows
    }
    // Descend toward the row's leaf, folding in the max of every left
    // sibling passed when moving right; the leaf itself is excluded.
    const std::int64_t target = first_leaf_ + row;
    BestScore best;
    std::int64_t cell = 0;
    while (cell != target) {
        touch();
        const NodeRefs refs = nav(cell);
        if (nav(refs.left_child).rightmost_child >= target) {
            cell = refs.left_child;
        } else {
            const auto left = static_cast<std::size_t>(refs.left_child);
            if (scores_[left] > best.value) best = {scores_[left], sources_[left]};
            cell = refs.right_child;
        }
    }
    return best;
}

void MaxPrefixTree::rebuild_internal() {
    for (std::int64_t cell = first_leaf_ - 1; cell >= 0; --cell) {
        touch();
        const NodeRefs refs = nav(cell);
        const auto left = static_cast<std::size_t>(refs.left_child);
        const auto right = static_cast<std::size_t>(refs.right_child);
        const std::size_t pick = scores_[left] >= scores_[right] ? left : right;
        scores_[static_cast<std::size_t>(cell)] = scores_[pick];
        sources_[static_cast<std::size_t>(cell)] = sources_[pick];
    }
}

void MaxPrefixTree::prefix_max_leaves() {
    Score running = 0;
    FragId running_source = kNoFragment;
    for (Pos row = 0; row < leaf_count_; ++row) {
        touch();
        const auto idx = static_cast<std::size_t>(first_leaf_ + row);
        if (scores_[idx] > running) {
            running = scores_[idx];
            running_source = sources_[idx];
        } else {
            scores_[idx] = running;
            sources_[idx] = running_source;
        }
    }
}

Score MaxPrefixTree::leaf(Pos row) const {
    check_row(row);
    return scores_[static_cast<std::size_t>(first_leaf_ + row)];
}

FragId MaxPrefixTree::leaf_source(Pos row) const {
    check_row(row);
    return sources_[static_cast<std::size_t>(first_leaf_ + row)];
}

void MaxPrefixTree::write_leaf(Pos row, Score value, FragId source) {
    check_row(row);
    if (counters_) ++counters_->leaf_writes;
    scores_[static_cast<std::size_t>(first_leaf_ + row)] = value;
    sources_[static_cast<std::size_t>(first_leaf_ + row)] = source;
}

BestScore MaxPrefixTree::root() const {
    if (scores_.empty()) return {};
    return {scores_[0], sources_[0]};
}

Score MaxPrefixTree::cell(std::int64_t index) const {
    if (index < 0 || index >= cell_count()) {
        throw std::out_of_range("cell index " + std::to_string(index) + " out of range");
    }
    return scores_[static_cast<std::size_t>(index)];
}

}  // namespace fragchain
