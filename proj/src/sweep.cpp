#include "beideal/sweep.hpp"

#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "beideal/enumerate.hpp"
#include "beideal/errors.hpp"

namespace bei {

GraphRecord process_graph(const Graph& g, int index, bool with_oracle,
                          const OracleOptions& oopts) {
    GraphRecord rec;
    rec.index = index;
    rec.graph6 = to_graph6(g);
    rec.bundle = invariants(g);
    rec.complete = rec.bundle.complete;
    if (!rec.complete) {
        const DepthResult pred = predict_depth(g);
        rec.class_tag = class_tag_name(pred.label.tag);
        rec.predicted = pred;
    }
    rec.has_long_induced_cycle = induced_cycle_scan(g).has_c5_or_longer;
    if (with_oracle && 2 * g.n() <= oopts.var_limit) {
        rec.oracle = depth_exact(g, oopts);
        if (rec.complete) {
            // K_m has depth m+1; a cheap oracle sanity anchor
            rec.consistent = rec.oracle->depth == g.n() + 1;
        } else {
            const auto& p = *rec.predicted;
            rec.consistent = rec.oracle->depth >= p.lower && rec.oracle->depth <= p.upper &&
                             (!p.exact || *p.exact == rec.oracle->depth);
            rec.q53_probe = rec.has_long_induced_cycle &&
                            rec.oracle->depth == rec.bundle.d + rec.bundle.f;
        }
    }
    return rec;
}

SweepReport sweep(const SweepOptions& opts) {
    if (opts.n_max < 3 || opts.n_max > 7) {
        throw LimitError("sweep: n_max must be in 3..7");
    }
    if (opts.with_oracle && opts.n_max > opts.oracle_n_limit) {
        throw LimitError("sweep: oracle sweeps are limited to n <= " +
                                std::to_string(opts.oracle_n_limit) +
                                " (run single graphs through the oracle instead)");
    }

    std::vector<Graph> todo;
    for (int n = 3; n <= opts.n_max; ++n) {
        auto graphs = enumerate_connected(n);
        todo.insert(todo.end(), graphs.begin(), graphs.end());
    }

    const auto start = std::chrono::steady_clock::now();
    auto out_of_budget = [&]() {
        if (opts.budget_ms < 0) return false;
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
        return elapsed > opts.budget_ms;
    };

    OracleOptions oopts;
    oopts.field = opts.field;
    oopts.var_limit = opts.var_limit;

    const int total = static_cast<int>(todo.size());
    std::vector<std::optional<GraphRecord>> slots(static_cast<std::size_t>(total));
    std::atomic<int> next{opts.resume_from};
    std::atomic<bool> stop{false};
    const int jobs = std::max(1, opts.jobs);

    auto worker = [&]() {
        while (!stop.load()) {
            const int idx = next.fetch_add(1);
            if (idx >= total) return;
            // always make progress on the first record so a resumed run
            // advances even under an exhausted budget
            if (idx > opts.resume_from && out_of_budget()) {
                stop.store(true);
                return;
            }
            slots[static_cast<std::size_t>(idx)] =
                process_graph(todo[static_cast<std::size_t>(idx)], idx, opts.with_oracle, oopts);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    SweepReport report;
    report.summary.total = total;
    int prefix_end = opts.resume_from;
    while (prefix_end < total && slots[static_cast<std::size_t>(prefix_end)]) ++prefix_end;
    for (int idx = opts.resume_from; idx < prefix_end; ++idx) {
        report.records.push_back(*slots[static_cast<std::size_t>(idx)]);
    }
    if (prefix_end < total) report.summary.resume_token = prefix_end;
    report.summary.processed = static_cast<int>(report.records.size());

    for (const auto& rec : report.records) {
        if (rec.class_tag) report.summary.by_class[*rec.class_tag] += 1;
        if (rec.oracle) report.summary.with_oracle += 1;
        if (!rec.consistent) {
            report.summary.mismatches += 1;
            report.summary.mismatch_graphs.push_back(rec.graph6);
        }
        if (rec.q53_probe) report.summary.q53_graphs.push_back(rec.graph6);
    }
    return report;
}

}  // namespace bei
