#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "autopc/ci_test.hpp"
#include "autopc/graph.hpp"
#include "autopc/pc.hpp"

namespace autopc {

/// Candidate significance levels, strictly ascending, each in (0, 1).
struct AlphaGrid {
    std::vector<double> values;

    static AlphaGrid default_grid();
    void validate() const;
};

/// Bounded agreement score in [0, 1] between an estimated graph and a
/// reference graph; must return exactly 1 for identical graphs, and higher
/// must mean closer.
using MetricFn =
    std::function<double(const MixedGraph& estimate, const MixedGraph& reference)>;

/// Built-in agreement metrics, keyed by name:
///   "nshd" - 1 - SHD / (d(d-1)/2), orientation-aware
///   "f1"   - adjacency-detection F1
///   "mcc"  - adjacency-detection Matthews correlation mapped onto [0, 1]
const std::map<std::string, MetricFn>& metric_registry();

/// Lookup by name; throws std::invalid_argument listing the known names.
const MetricFn& metric_by_name(const std::string& name);

struct GraphSummary {
    int num_edges = 0;
    long long ci_tests = 0;
    double wall_seconds = 0.0;
};

/// One evaluated candidate level: the unrestricted run, the rerun with
/// conditioning pools restricted to the first run's parent sets, and the
/// agreement score between them.
struct TraceEntry {
    double alpha = 0.0;
    double score = 0.0;
    GraphSummary first_run;
    GraphSummary second_run;
};

struct SelectionResult {
    MixedGraph graph{0};       ///< unrestricted-run graph at the chosen level
    double alpha = 0.0;
    double score = 0.0;
    std::vector<TraceEntry> trace;  ///< evaluated levels, in grid order
};

struct AutoPcOptions {
    AlphaGrid grid = AlphaGrid::default_grid();
    /// Stop scanning once the running best score is within 1e-12 of perfect;
    /// levels after the stop are neither evaluated nor traced.
    bool early_break = true;
    int max_cond_size = -1;
};

/// Pick the significance level whose restricted rerun agrees best with the
/// unrestricted run. Ascending scan; a later level must score strictly
/// higher to displace the incumbent, so ties go to the smallest level.
SelectionResult autopc(CiTest& test, const MetricFn& metric, const AutoPcOptions& opts = {});

/// Same selection, but grid levels are evaluated concurrently on `jobs`
/// workers, each with its own test instance from `factory`. The chosen
/// graph, level, score, and trace match the sequential version exactly.
SelectionResult autopc_parallel(const CiTestFactory& factory, const MetricFn& metric,
                                int jobs, const AutoPcOptions& opts = {});

/// Both runs for one candidate level, reusable across different metrics.
struct AlphaEvaluation {
    double alpha = 0.0;
    MixedGraph first{0};
    MixedGraph second{0};
    GraphSummary first_summary;
    GraphSummary second_summary;
};

/// Evaluate every grid level (no early stop). Building blocks for callers
/// that score the same runs under several metrics.
std::vector<AlphaEvaluation> evaluate_alpha_grid(CiTest& test, const AutoPcOptions& opts);

/// Replay the selection scan over precomputed evaluations, honouring the
/// early stop: entries past the stop point do not appear in the trace.
SelectionResult select_from(const std::vector<AlphaEvaluation>& evaluations,
                            const MetricFn& metric, bool early_break = true);

}  // namespace autopc
