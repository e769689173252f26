#include "fragchain/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fragchain {

Chain oracle_quadratic_chain(const Instance& inst) {
    const FragId k = inst.k();
    Chain chain;
    if (k == 0) return chain;

    std::vector<FragId> order(static_cast<std::size_t>(k));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](FragId a, FragId b) {
        const auto ra = inst.fragments[static_cast<std::size_t>(a)].right;
        const auto rb = inst.fragments[static_cast<std::size_t>(b)].right;
        return ra != rb ? ra < rb : a < b;
    });

    // Any predecessor ends strictly left of this fragment, so it appears
    // earlier in right-border order; scan the whole processed prefix.
    std::vector<Score> best(static_cast<std::size_t>(k), 0);
    std::vector<FragId> prev(static_cast<std::size_t>(k), kNoFragment);
    Score top = -1;
    FragId top_frag = kNoFragment;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const FragId f = order[pos];
        const Fragment& frag = inst.fragments[static_cast<std::size_t>(f)];
        Score s = frag.score;
        FragId p = kNoFragment;
        for (std::size_t q = 0; q < pos; ++q) {
            const FragId g = order[q];
            const Fragment& other = inst.fragments[static_cast<std::size_t>(g)];
            if (other.right < frag.left && other.top < frag.bottom &&
                best[static_cast<std::size_t>(g)] + frag.score > s) {
                s = best[static_cast<std::size_t>(g)] + frag.score;
                p = g;
            }
        }
        best[static_cast<std::size_t>(f)] = s;
        prev[static_cast<std::size_t>(f)] = p;
        if (s > top) {
            top = s;
            top_frag = f;
        }
    }

    for (FragId cur = top_frag; cur != kNoFragment; cur = prev[static_cast<std::size_t>(cur)]) {
        chain.fragment_ids.push_back(cur);
    }
    std::reverse(chain.fragment_ids.begin(), chain.fragment_ids.end());
    chain.score = top;
    return chain;
}

Score oracle_quadratic(const Instance& inst) { return oracle_quadratic_chain(inst).score; }

namespace {

constexpr FragId kExhaustiveLimit = 20;

void check_exhaustive_limit(FragId k) {
    if (k > kExhaustiveLimit) {
        throw std::invalid_argument("exhaustive enumeration is limited to 20 fragments");
    }
}

// A subset is a chain iff, sorted by left border, consecutive members are
// strictly increasing in both axes.
bool subset_is_chain(const Instance& inst, std::vector<FragId>& ids) {
    std::sort(ids.begin(), ids.end(), [&](FragId a, FragId b) {
        const auto la = inst.fragments[static_cast<std::size_t>(a)].left;
        const auto lb = inst.fragments[static_cast<std::size_t>(b)].left;
        return la != lb ? la < lb : a < b;
    });
    for (std::size_t i = 1; i < ids.size(); ++i) {
        const Fragment& a = inst.fragments[static_cast<std::size_t>(ids[i - 1])];
        const Fragment& b = inst.fragments[static_cast<std::size_t>(ids[i])];
        if (!(a.right < b.left && a.top < b.bottom)) return false;
    }
    return true;
}

Score subset_score(const Instance& inst, const std::vector<FragId>& ids) {
    Score s = 0;
    for (FragId f : ids) s += inst.fragments[static_cast<std::size_t>(f)].score;
    return s;
}

}  // namespace

std::vector<std::vector<FragId>> enumerate_chains(const Instance& inst) {
    const FragId k = inst.k();
    check_exhaustive_limit(k);
    std::vector<std::vector<FragId>> chains;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
        std::vector<FragId> ids;
        for (FragId f = 0; f < k; ++f) {
            if (mask >> f & 1) ids.push_back(f);
        }
        if (subset_is_chain(inst, ids)) chains.push_back(std::move(ids));
    }
    return chains;
}

Chain oracle_exhaustive_chain(const Instance& inst) {
    const FragId k = inst.k();
    check_exhaustive_limit(k);
    Chain best;
    std::vector<FragId> ids;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
        ids.clear();
        for (FragId f = 0; f < k; ++f) {
            if (mask >> f & 1) ids.push_back(f);
        }
        if (!subset_is_chain(inst, ids)) continue;
        const Score s = subset_score(inst, ids);
        if (s > best.score) {
            best.score = s;
            best.fragment_ids = ids;
        }
    }
    return best;
}

Score oracle_exhaustive(const Instance& inst) { return oracle_exhaustive_chain(inst).score; }

}  // namespace fragchain
