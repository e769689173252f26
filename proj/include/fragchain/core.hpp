#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace fragchain {

using Pos = std::int64_t;
using Score = std::int64_t;
using FragId = std::int32_t;

inline constexpr FragId kNoFragment = -1;

/// A scored rectangle over the two sequences: columns [left, right] of the
/// first sequence and rows [bottom, top] of the second, 0-based inclusive.
/// A fragment's id is its index in the owning instance's fragment list.
struct Fragment {
    Pos left = 0;
    Pos right = 0;
    Pos bottom = 0;
    Pos top = 0;
    Score score = 0;

    friend bool operator==(const Fragment&, const Fragment&) = default;
};

/// A chaining instance: the fragment set plus the two sequence lengths.
/// Sequence contents are never needed, only their lengths.
struct Instance {
    Pos n = 0;  // length of the first sequence (x axis)
    Pos m = 0;  // length of the second sequence (y axis)
    std::vector<Fragment> fragments;

    FragId k() const { return static_cast<FragId>(fragments.size()); }

    friend bool operator==(const Instance&, const Instance&) = default;
};

/// Best value found by a prefix query, together with the fragment that ends
/// the corresponding partial chain (kNoFragment for the empty chain).
struct BestScore {
    Score value = 0;
    FragId source = kNoFragment;
};

/// Per-fragment best-chain-ending-here scores and predecessor links, filled
/// in by any chainer. kNoFragment marks "no predecessor" / "empty chain".
struct ScoreTable {
    std::vector<Score> score;
    std::vector<FragId> pred;
    FragId best_end = kNoFragment;
};

struct Chain {
    std::vector<FragId> fragment_ids;  // in chain order
    Score score = 0;
};

// Throws std::invalid_argument naming the first violated field constraint.
void validate_instance(const Instance& inst);

// True iff every consecutive pair is strictly increasing in both axes and
// the recorded score equals the member sum. Out-of-range ids throw.
bool validate_chain(const Instance& inst, const Chain& chain);

// Sum of member scores; throws std::domain_error when the ids, in the given
// order, do not form a chain.
Score chain_score_of(const Instance& inst, std::span<const FragId> ids);

// Follows pred links back from best_end; empty chain when best_end is unset.
Chain reconstruct_chain(const Instance& inst, const ScoreTable& table);

}  // namespace fragchain
