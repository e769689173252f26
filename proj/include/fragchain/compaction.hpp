#pragma once

#include <optional>

#include "fragchain/core.hpp"

namespace fragchain {

enum class CompactionStrategy { Sort, Bucket };

// Sort when k * ceil(log2 k) fits within the axis length (k <= 1 is always
// Sort), Bucket otherwise. Both strategies produce identical output; only
// the running time differs.
CompactionStrategy select_strategy(std::int64_t k, Pos axis_length);

/// An instance with every border-free axis position deleted, plus the maps
/// between original and compact coordinates. Every position of the inner
/// instance carries at least one fragment border, so n' <= min(n, 2k) and
/// m' <= min(m, 2k).
struct CompactInstance {
    Instance inner;               // compacted instance, lengths n' and m'
    std::vector<Pos> t_original;  // compact x index -> original position, strictly increasing
    std::vector<Pos> u_original;  // compact y index -> original position

    Pos n_prime() const { return inner.n; }
    Pos m_prime() const { return inner.m; }

    Pos to_original_t(Pos compact) const { return t_original.at(static_cast<std::size_t>(compact)); }
    Pos to_original_u(Pos compact) const { return u_original.at(static_cast<std::size_t>(compact)); }

    // Empty when the original position carries no border.
    std::optional<Pos> to_compact_t(Pos original) const;
    std::optional<Pos> to_compact_u(Pos original) const;

    friend bool operator==(const CompactInstance&, const CompactInstance&) = default;
};

// Compacts with the per-axis strategy picked by select_strategy. A k = 0
// instance compacts to the degenerate n' = m' = 0 instance; an already
// compact instance maps to itself with identity maps.
CompactInstance compact(const Instance& inst);

// Same output as compact(), with the given strategy forced on both axes.
CompactInstance compact_forced(const Instance& inst, CompactionStrategy strategy);

}  // namespace fragchain
