#include "fragchain/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fragchain {

namespace {

const Fragment& fragment_at(const Instance& inst, FragId id) {
    if (id < 0 || id >= inst.k()) {
        throw std::out_of_range("fragment id " + std::to_string(id) + " out of range");
    }
    return inst.fragments[static_cast<std::size_t>(id)];
}

bool precedes(const Fragment& a, const Fragment& b) {
    // Strict in both axes: touching fragments do not chain.
    return a.right < b.left && a.top < b.bottom;
}

}  // namespace

void validate_instance(const Instance& inst) {
    if (inst.n < 0 || inst.m < 0) {
        throw std::invalid_argument("sequence lengths must be non-negative");
    }
    for (std::size_t i = 0; i < inst.fragments.size(); ++i) {
        const Fragment& f = inst.fragments[i];
        const std::string at = "fragment " + std::to_string(i) + ": ";
        if (f.left < 0 || f.bottom < 0) throw std::invalid_argument(at + "negative coordinate");
        if (f.left > f.right) throw std::invalid_argument(at + "left border exceeds right border");
        if (f.bottom > f.top) throw std::invalid_argument(at + "bottom border exceeds top border");
        if (f.right >= inst.n) throw std::invalid_argument(at + "right border outside sequence");
        if (f.top >= inst.m) throw std::invalid_argument(at + "top border outside sequence");
        if (f.score < 0) throw std::invalid_argument(at + "negative score");
    }
}

bool validate_chain(const Instance& inst, const Chain& chain) {
    Score total = 0;
    for (std::size_t i = 0; i < chain.fragment_ids.size(); ++i) {
        const Fragment& f = fragment_at(inst, chain.fragment_ids[i]);
        total += f.score;
        if (i > 0 && !precedes(fragment_at(inst, chain.fragment_ids[i - 1]), f)) {
            return false;
        }
    }
    return total == chain.score;
}

Score chain_score_of(const Instance& inst, std::span<const FragId> ids) {
    Score total = 0;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const Fragment& f = fragment_at(inst, ids[i]);
        total += f.score;
        if (i > 0 && !precedes(fragment_at(inst, ids[i - 1]), f)) {
            throw std::domain_error("fragment ids do not form a chain");
        }
    }
    return total;
}

Chain reconstruct_chain(const Instance& inst, const ScoreTable& table) {
    Chain chain;
    FragId cur = table.best_end;
    while (cur != kNoFragment) {
        chain.fragment_ids.push_back(cur);
        chain.score += fragment_at(inst, cur).score;
        cur = table.pred[static_cast<std::size_t>(cur)];
    }
    std::reverse(chain.fragment_ids.begin(), chain.fragment_ids.end());
    return chain;
}

}  // namespace fragchain
