#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "beideal/depth.hpp"
#include "beideal/oracle.hpp"

namespace bei {

struct GraphRecord {
    int index = 0;
    std::string graph6;
    InvariantBundle bundle;
    bool complete = false;
    std::optional<std::string> class_tag;
    std::optional<DepthResult> predicted;
    std::optional<OracleReport> oracle;
    bool has_long_induced_cycle = false;
    bool consistent = true;
    bool q53_probe = false;  // induced C_{>=5} present and oracle depth == d+f
};

struct SweepSummary {
    int total = 0;
    int processed = 0;
    int with_oracle = 0;
    int mismatches = 0;
    std::map<std::string, int> by_class;
    std::vector<std::string> mismatch_graphs;  // graph6 keys, must stay empty
    std::vector<std::string> q53_graphs;       // report-only
    std::optional<int> resume_token;           // set when the budget ran out
};

struct SweepReport {
    std::vector<GraphRecord> records;
    SweepSummary summary;
};

struct SweepOptions {
    int n_max = 6;
    bool with_oracle = false;
    int jobs = 1;
    long long budget_ms = -1;   // < 0: unlimited
    int resume_from = 0;        // skip records with index < resume_from
    int oracle_n_limit = 6;     // per-graph oracle cutoff inside sweeps
    int var_limit = 16;
    Field field = Field::Q;
};

/// Classify every connected graph with 3 <= n <= n_max (one per isomorphism
/// class), predict depth, optionally run the oracle, and record
/// prediction/oracle consistency. Deterministic: records are emitted in
/// enumeration order regardless of the number of jobs.
SweepReport sweep(const SweepOptions& opts);

/// One graph through the same pipeline (used by sweep and the CLI).
GraphRecord process_graph(const Graph& g, int index, bool with_oracle, const OracleOptions& oopts);

}  // namespace bei
