#include "fragchain/ls_chainer.hpp"

#include <algorithm>

namespace fragchain {

BestScore StaircaseIndex::best_below(Pos row) const {
    if (counters_) ++counters_->staircase_ops;
    auto it = entries_.lower_bound(row);
    if (it == entries_.begin()) return {};
    --it;
    return {it->second.value, it->second.source};
}

void StaircaseIndex::insert(Pos row, Score value, FragId source) {
    if (counters_) ++counters_->staircase_ops;
    auto it = entries_.lower_bound(row);
    if (it != entries_.begin() && std::prev(it)->second.value >= value) {
        return;  // dominated by a lower row
    }
    while (it != entries_.end() && it->second.value <= value) {
        it = entries_.erase(it);  // dominated by the new entry
        ++erase_count_;
        if (counters_) ++counters_->staircase_ops;
    }
    if (it != entries_.end() && it->first == row) {
        return;  // the entry already at this row carries a higher value
    }
    entries_.emplace_hint(it, row, Entry{value, source});
    ++insert_count_;
    if (counters_) ++counters_->staircase_ops;
}

BestScore StaircaseIndex::top() const {
    if (entries_.empty()) return {};
    const auto& last = *entries_.rbegin();
    return {last.second.value, last.second.source};
}

bool StaircaseIndex::is_staircase() const {
    Score prev_value = -1;
    for (const auto& [row, entry] : entries_) {
        if (entry.value <= prev_value) return false;  // rows increase by map order
        prev_value = entry.value;
    }
    return true;
}

LsResult chain_score_ls(const Instance& inst) {
    LsResult result;
    const FragId k = inst.k();
    result.table.score.assign(static_cast<std::size_t>(k), 0);
    result.table.pred.assign(static_cast<std::size_t>(k), kNoFragment);
    if (k == 0) return result;

    struct Event {
        Pos position;
        std::uint8_t kind;  // 0 = begin, 1 = end
        FragId frag;
    };
    std::vector<Event> events;
    events.reserve(static_cast<std::size_t>(k) * 2);
    for (FragId f = 0; f < k; ++f) {
        events.push_back({inst.fragments[static_cast<std::size_t>(f)].left, 0, f});
        events.push_back({inst.fragments[static_cast<std::size_t>(f)].right, 1, f});
    }
    // Begin before end at equal positions: a fragment ending at column i
    // must not feed one beginning at column i.
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
        return a.position != b.position ? a.position < b.position : a.kind < b.kind;
    });

    StaircaseIndex index;
    index.attach_counters(&result.counters);
    for (const Event& event : events) {
        const Fragment& f = inst.fragments[static_cast<std::size_t>(event.frag)];
        const auto id = static_cast<std::size_t>(event.frag);
        if (event.kind == 0) {
            const BestScore best = index.best_below(f.bottom);
            result.table.score[id] = f.score + best.value;
            result.table.pred[id] = best.source;
        } else {
            index.insert(f.top, result.table.score[id], event.frag);
        }
        ++result.events_processed;
    }

    const BestScore top = index.top();
    result.score = top.value;
    result.table.best_end = top.source;
    result.staircase_inserts = index.insert_count();
    result.staircase_erases = index.erase_count();
    return result;
}

}  // namespace fragchain
