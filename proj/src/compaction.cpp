#include "fragchain/compaction.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace fragchain {

CompactionStrategy select_strategy(std::int64_t k, Pos axis_length) {
    if (k <= 1) return CompactionStrategy::Sort;
    // ceil(log2 k) for k >= 2
    const std::int64_t log2k = std::bit_width(static_cast<std::uint64_t>(k - 1));
    return k * log2k <= axis_length ? CompactionStrategy::Sort : CompactionStrategy::Bucket;
}

std::optional<Pos> CompactInstance::to_compact_t(Pos original) const {
    auto it = std::lower_bound(t_original.begin(), t_original.end(), original);
    if (it == t_original.end() || *it != original) return std::nullopt;
    return it - t_original.begin();
}

std::optional<Pos> CompactInstance::to_compact_u(Pos original) const {
    auto it = std::lower_bound(u_original.begin(), u_original.end(), original);
    if (it == u_original.end() || *it != original) return std::nullopt;
    return it - u_original.begin();
}

namespace {

// Sorted unique border positions of one axis, by sorting the 2k borders.
std::vector<Pos> borders_by_sort(const std::vector<Fragment>& fragments,
                                 Pos Fragment::* lo, Pos Fragment::* hi) {
    std::vector<Pos> borders;
    borders.reserve(fragments.size() * 2);
    for (const Fragment& f : fragments) {
        borders.push_back(f.*lo);
        borders.push_back(f.*hi);
    }
    std::sort(borders.begin(), borders.end());
    borders.erase(std::unique(borders.begin(), borders.end()), borders.end());
    return borders;
}

// Same result by marking occupied positions along the axis.
std::vector<Pos> borders_by_bucket(const std::vector<Fragment>& fragments,
                                   Pos Fragment::* lo, Pos Fragment::* hi, Pos axis_length) {
    std::vector<char> occupied(static_cast<std::size_t>(axis_length), 0);
    for (const Fragment& f : fragments) {
        occupied[static_cast<std::size_t>(f.*lo)] = 1;
        occupied[static_cast<std::size_t>(f.*hi)] = 1;
    }
    std::vector<Pos> borders;
    for (Pos p = 0; p < axis_length; ++p) {
        if (occupied[static_cast<std::size_t>(p)]) borders.push_back(p);
    }
    return borders;
}

// Original position -> compact index for one axis. The bucket variant
// trades an axis-length array for O(1) lookups.
class AxisRank {
public:
    AxisRank(const std::vector<Pos>& borders, CompactionStrategy strategy, Pos axis_length)
        : borders_(borders) {
        if (strategy == CompactionStrategy::Bucket) {
            dense_.assign(static_cast<std::size_t>(axis_length), -1);
            for (std::size_t i = 0; i < borders.size(); ++i) {
                dense_[static_cast<std::size_t>(borders[i])] = static_cast<Pos>(i);
            }
        }
    }

    Pos operator()(Pos original) const {
        if (!dense_.empty()) return dense_[static_cast<std::size_t>(original)];
        return std::lower_bound(borders_.begin(), borders_.end(), original) - borders_.begin();
    }

private:
    const std::vector<Pos>& borders_;
    std::vector<Pos> dense_;
};

CompactInstance compact_impl(const Instance& inst, CompactionStrategy on_t, CompactionStrategy on_u) {
    CompactInstance out;
    if (inst.fragments.empty()) return out;  // degenerate n' = m' = 0

    out.t_original = on_t == CompactionStrategy::Sort
                         ? borders_by_sort(inst.fragments, &Fragment::left, &Fragment::right)
                         : borders_by_bucket(inst.fragments, &Fragment::left, &Fragment::right, inst.n);
    out.u_original = on_u == CompactionStrategy::Sort
                         ? borders_by_sort(inst.fragments, &Fragment::bottom, &Fragment::top)
                         : borders_by_bucket(inst.fragments, &Fragment::bottom, &Fragment::top, inst.m);

    out.inner.n = static_cast<Pos>(out.t_original.size());
    out.inner.m = static_cast<Pos>(out.u_original.size());

    const AxisRank rank_t(out.t_original, on_t, inst.n);
    const AxisRank rank_u(out.u_original, on_u, inst.m);
    out.inner.fragments.reserve(inst.fragments.size());
    for (const Fragment& f : inst.fragments) {
        out.inner.fragments.push_back(
            {rank_t(f.left), rank_t(f.right), rank_u(f.bottom), rank_u(f.top), f.score});
    }
    return out;
}

}  // namespace

CompactInstance compact(const Instance& inst) {
    const auto k = static_cast<std::int64_t>(inst.fragments.size());
    return compact_impl(inst, select_strategy(k, inst.n), select_strategy(k, inst.m));
}

CompactInstance compact_forced(const Instance& inst, CompactionStrategy strategy) {
    return compact_impl(inst, strategy, strategy);
}

}  // namespace fragchain
