#include "fragchain/hybrid_chainer.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>

#include "column_buckets.hpp"
#include "fragchain/max_prefix_tree.hpp"

namespace fragchain {

DensityPlan classify_columns(const CompactInstance& compact) {
    DensityPlan plan;
    const Instance& inner = compact.inner;
    plan.densities.assign(static_cast<std::size_t>(inner.n), 0);
    for (const Fragment& f : inner.fragments) {
        ++plan.densities[static_cast<std::size_t>(f.left)];
        ++plan.densities[static_cast<std::size_t>(f.right)];  // left == right counts twice
    }
    if (inner.m <= 2) {
        // log2(m') - 1 <= 0: the dense path costs O(K_p) anyway, run it everywhere.
        plan.threshold = 0.0;
    } else {
        plan.threshold = static_cast<double>(inner.m) / (std::log2(static_cast<double>(inner.m)) - 1.0);
    }
    plan.modes.resize(static_cast<std::size_t>(inner.n));
    for (std::size_t p = 0; p < plan.modes.size(); ++p) {
        plan.modes[p] =
            static_cast<double>(plan.densities[p]) > plan.threshold ? ColumnMode::Dp : ColumnMode::Ls;
    }
    return plan;
}

namespace {

HybridResult run(const Instance& inst, ForceMode force, std::optional<std::vector<ColumnMode>> override_modes) {
    HybridResult result;
    const FragId k = inst.k();
    result.table.score.assign(static_cast<std::size_t>(k), 0);
    result.table.pred.assign(static_cast<std::size_t>(k), kNoFragment);
    result.compacted = compact(inst);
    const Instance& comp = result.compacted.inner;

    if (k > 0) result.plan = classify_columns(result.compacted);
    if (force == ForceMode::AllDp) {
        std::fill(result.plan.modes.begin(), result.plan.modes.end(), ColumnMode::Dp);
    } else if (force == ForceMode::AllLs) {
        std::fill(result.plan.modes.begin(), result.plan.modes.end(), ColumnMode::Ls);
    }
    if (override_modes) {
        if (static_cast<Pos>(override_modes->size()) != comp.n) {
            throw std::invalid_argument("mode array size does not match the compact instance");
        }
        result.plan.modes = std::move(*override_modes);
    }
    if (k == 0) return result;

    const Pos columns = comp.n;
    const Pos rows = comp.m;
    const auto& modes = result.plan.modes;
    const detail::ColumnBuckets begins(columns, k, [&](FragId f) { return comp.fragments[f].left; });
    const detail::ColumnBuckets ends(columns, k, [&](FragId f) { return comp.fragments[f].right; });

    MaxPrefixTree tree(rows);
    tree.attach_counters(&result.counters);
    std::vector<std::vector<FragId>> row_begins(static_cast<std::size_t>(rows));
    std::vector<std::vector<FragId>> row_ends(static_cast<std::size_t>(rows));

    Score top_score = -1;
    FragId top_frag = kNoFragment;
    const auto record = [&](FragId f, Score s) {
        result.table.score[static_cast<std::size_t>(f)] = s;
        if (s > top_score) {
            top_score = s;
            top_frag = f;
        }
        ++result.events_processed;
    };

    for (Pos i = 0; i < columns; ++i) {
        const std::size_t col = static_cast<std::size_t>(i);
        if (i > 0 && modes[col] != modes[col - 1]) {
            ++result.counters.conversion_sweeps;
            if (modes[col] == ColumnMode::Ls) {
                tree.rebuild_internal();  // leaves were a recurrence column, refresh the maxima
            } else {
                tree.prefix_max_leaves();  // leaves become the previous column of the recurrence
            }
        }

        if (modes[col] == ColumnMode::Dp) {
            for (FragId f : begins.column(i)) {
                row_begins[static_cast<std::size_t>(comp.fragments[f].bottom)].push_back(f);
            }
            for (FragId f : ends.column(i)) {
                row_ends[static_cast<std::size_t>(comp.fragments[f].top)].push_back(f);
            }
            Score diag = 0;
            FragId diag_source = kNoFragment;
            for (Pos j = 0; j < rows; ++j) {
                const auto row = static_cast<std::size_t>(j);
                const Score above = tree.leaf(j);
                const FragId above_source = tree.leaf_source(j);
                for (FragId f : row_begins[row]) {
                    record(f, comp.fragments[f].score + diag);
                    result.table.pred[static_cast<std::size_t>(f)] = diag_source;
                }
                Score ended = -1;
                FragId ended_source = kNoFragment;
                for (FragId f : row_ends[row]) {
                    if (result.table.score[static_cast<std::size_t>(f)] > ended) {
                        ended = result.table.score[static_cast<std::size_t>(f)];
                        ended_source = f;
                    }
                    ++result.events_processed;
                }
                Score best = above;
                FragId best_source = above_source;
                if (j > 0 && tree.leaf(j - 1) > best) {
                    best = tree.leaf(j - 1);
                    best_source = tree.leaf_source(j - 1);
                }
                if (ended > best) {
                    best = ended;
                    best_source = ended_source;
                }
                tree.write_leaf(j, best, best_source);
                ++result.counters.dp_cell_updates;
                diag = above;
                diag_source = above_source;
                row_begins[row].clear();
                row_ends[row].clear();
            }
        } else {
            // All begins before all ends: same-column fragments must not chain.
            for (FragId f : begins.column(i)) {
                const BestScore best = tree.best_below(comp.fragments[f].bottom);
                record(f, comp.fragments[f].score + best.value);
                result.table.pred[static_cast<std::size_t>(f)] = best.source;
            }
            for (FragId f : ends.column(i)) {
                tree.set_score(comp.fragments[f].top, result.table.score[static_cast<std::size_t>(f)], f);
                ++result.events_processed;
            }
        }
    }

    result.score = modes[static_cast<std::size_t>(columns - 1)] == ColumnMode::Dp
                       ? tree.leaf(rows - 1)
                       : tree.root().value;
    result.table.best_end = top_frag;
    return result;
}

}  // namespace

HybridResult chain_score_hybrid(const Instance& inst, ForceMode force) {
    return run(inst, force, std::nullopt);
}

HybridResult chain_score_hybrid(const Instance& inst, std::vector<ColumnMode> modes) {
    return run(inst, ForceMode::Auto, std::move(modes));
}

}  // namespace fragchain
