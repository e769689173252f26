#pragma once

#include <span>
#include <vector>

#include "fragchain/core.hpp"

namespace fragchain::detail {

// Fragment ids grouped by a per-fragment column key, counting-sort style:
// O(columns + k) to build, contiguous per-column spans, insertion order
// preserved within a column.
class ColumnBuckets {
public:
    template <typename KeyFn>
    ColumnBuckets(Pos column_count, FragId k, KeyFn key) {
        offsets_.assign(static_cast<std::size_t>(column_count) + 1, 0);
        for (FragId f = 0; f < k; ++f) ++offsets_[static_cast<std::size_t>(key(f)) + 1];
        for (std::size_t c = 1; c < offsets_.size(); ++c) offsets_[c] += offsets_[c - 1];
        ids_.resize(static_cast<std::size_t>(k));
        std::vector<std::int64_t> cursor(offsets_.begin(), offsets_.end() - 1);
        for (FragId f = 0; f < k; ++f) {
            ids_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(key(f))]++)] = f;
        }
    }

    std::span<const FragId> column(Pos c) const {
        const auto lo = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(c)]);
        const auto hi = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(c) + 1]);
        return {ids_.data() + lo, ids_.data() + hi};
    }

private:
    std::vector<std::int64_t> offsets_;
    std::vector<FragId> ids_;
};

}  // namespace fragchain::detail
