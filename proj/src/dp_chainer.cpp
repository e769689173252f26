#include "fragchain/dp_chainer.hpp"

#include "column_buckets.hpp"

namespace fragchain {

namespace {

DpResult run(const Instance& inst, const DpColumnObserver* on_column) {
    DpResult result;
    const FragId k = inst.k();
    result.table.score.assign(static_cast<std::size_t>(k), 0);
    result.table.pred.assign(static_cast<std::size_t>(k), kNoFragment);
    if (k == 0) return result;

    const Pos n = inst.n;
    const Pos m = inst.m;
    const detail::ColumnBuckets begins(n, k, [&](FragId f) { return inst.fragments[f].left; });
    const detail::ColumnBuckets ends(n, k, [&](FragId f) { return inst.fragments[f].right; });

    // Rolling column: before row j of column i is rewritten, cells[j] still
    // holds the previous column's value. cell_source tracks the fragment
    // ending the partial chain each cell scores.
    std::vector<Score> cells(static_cast<std::size_t>(m), 0);
    std::vector<FragId> cell_source(static_cast<std::size_t>(m), kNoFragment);
    std::vector<std::vector<FragId>> row_begins(static_cast<std::size_t>(m));
    std::vector<std::vector<FragId>> row_ends(static_cast<std::size_t>(m));

    for (Pos i = 0; i < n; ++i) {
        for (FragId f : begins.column(i)) {
            row_begins[static_cast<std::size_t>(inst.fragments[f].bottom)].push_back(f);
        }
        for (FragId f : ends.column(i)) {
            row_ends[static_cast<std::size_t>(inst.fragments[f].top)].push_back(f);
        }

        Score diag = 0;  // previous column, one row down
        FragId diag_source = kNoFragment;
        for (Pos j = 0; j < m; ++j) {
            const auto row = static_cast<std::size_t>(j);
            const Score above = cells[row];  // previous column, this row
            const FragId above_source = cell_source[row];

            // A fragment starting at (i, j) extends the best chain strictly
            // inside (0,0)..(i-1, j-1); begins go first so a unit fragment
            // can end within the same cell.
            for (FragId f : row_begins[row]) {
                result.table.score[static_cast<std::size_t>(f)] = inst.fragments[f].score + diag;
                result.table.pred[static_cast<std::size_t>(f)] = diag_source;
                ++result.events_processed;
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
            if (j > 0 && cells[row - 1] > best) {
                best = cells[row - 1];
                best_source = cell_source[row - 1];
            }
            if (ended > best) {
                best = ended;
                best_source = ended_source;
            }
            cells[row] = best;
            cell_source[row] = best_source;
            ++result.counters.dp_cell_updates;

            diag = above;
            diag_source = above_source;
            row_begins[row].clear();
            row_ends[row].clear();
        }
        if (on_column) (*on_column)(i, std::span<const Score>(cells));
    }

    result.score = cells[static_cast<std::size_t>(m - 1)];
    result.table.best_end = cell_source[static_cast<std::size_t>(m - 1)];
    return result;
}

}  // namespace

DpResult chain_score_dp(const Instance& inst) { return run(inst, nullptr); }

DpResult chain_score_dp(const Instance& inst, const DpColumnObserver& on_column) {
    return run(inst, &on_column);
}

}  // namespace fragchain
