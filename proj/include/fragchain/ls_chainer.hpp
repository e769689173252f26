#pragma once

#include <cstddef>
#include <map>

#include "fragchain/core.hpp"
#include "fragchain/work_counters.hpp"

namespace fragchain {

/// Pareto frontier of partial-chain ends: entries are strictly increasing in
/// both row and value, so the predecessor of a row carries the best value
/// among all rows strictly below it. Inserts prune dominated entries.
class StaircaseIndex {
public:
    struct Entry {
        Score value = 0;
        FragId source = kNoFragment;
    };

    // Best value among entries with row' < row; {0, kNoFragment} if none.
    BestScore best_below(Pos row) const;

    // No-op when an entry at row' <= row already has value' >= value;
    // otherwise removes every entry at row' >= row with value' <= value and
    // inserts (row, value).
    void insert(Pos row, Score value, FragId source);

    // Highest entry; {0, kNoFragment} when empty. By the staircase shape it
    // carries the maximum value.
    BestScore top() const;

    std::size_t size() const { return entries_.size(); }
    bool is_staircase() const;
    std::uint64_t insert_count() const { return insert_count_; }
    std::uint64_t erase_count() const { return erase_count_; }

    void attach_counters(WorkCounters* counters) { counters_ = counters; }

private:
    std::map<Pos, Entry> entries_;
    std::uint64_t insert_count_ = 0;
    std::uint64_t erase_count_ = 0;
    WorkCounters* counters_ = nullptr;
};

struct LsResult {
    Score score = 0;
    ScoreTable table;
    WorkCounters counters;
    std::uint64_t events_processed = 0;
    std::uint64_t staircase_inserts = 0;
    std::uint64_t staircase_erases = 0;
};

// O(k log k) line-sweep chainer: begin/end border events sorted along the
// first sequence (begin before end at equal positions) against a staircase
// index over the second sequence.
LsResult chain_score_ls(const Instance& inst);

}  // namespace fragchain
