#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "autopc/autopc.hpp"
#include "autopc/dataset.hpp"
#include "autopc/graph.hpp"
#include "autopc/simulate.hpp"

namespace autopc {

struct ExperimentConfig {
    unsigned long long master_seed = 1;
    int reps = 100;
    std::vector<int> dims = {10, 20};
    std::vector<int> sample_sizes = {1000, 10000};
    AlphaGrid grid = AlphaGrid::default_grid();
    double expected_degree = 2.0;
    CoefInterval coefs;
    int max_cond_size = -1;
    int jobs = 1;

    void validate() const;
};

/// One benchmark row: a method's result on one replication, scored against
/// the true equivalence class. `alpha` is NaN for methods without a single
/// level ("mean"). The "mean" row averages the fixed-level rows of its
/// replication, so `shd` is fractional there.
struct RepRecord {
    int d = 0;
    int n = 0;
    int rep = 0;
    std::string method;
    double alpha = 0.0;
    double shd = 0.0;
    double f1 = 0.0;
    double mcc = 0.0;
    double time_ms = 0.0;
};

struct BenchResults {
    ExperimentConfig config;
    std::vector<RepRecord> records;  ///< ordered by (d, n, rep, method)
};

/// Per-(d, n, method, alpha-for-fixed-level-rows) averages.
struct MethodSummary {
    int d = 0;
    int n = 0;
    std::string method;
    double alpha = 0.0;  ///< NaN unless the method runs at one fixed level
    double mean_alpha = 0.0;
    double mean_shd = 0.0;
    double mean_f1 = 0.0;
    double mean_mcc = 0.0;
    double mean_time_ms = 0.0;
    int reps = 0;
};

/// Run the full synthetic study. Each replication draws a random DAG and a
/// sample (seeded only by (master_seed, d, n, rep), so results do not depend
/// on `jobs`), then scores: plain search at every grid level ("pc"), the
/// per-replication average of those rows ("mean"), the BIC-selected level
/// ("bic"), and the agreement-selected level under each built-in metric
/// ("autopc_<metric>"). Estimates are scored against the true CPDAG.
BenchResults run_experiment(const ExperimentConfig& config);

/// BIC of a DAG fitted by per-node least squares with intercept:
///   sum_v n * ln(RSS_v / n) + ln(n) * (#edges + d).
double bic_score(const Dataset& data, const MixedGraph& dag);

struct BicSelection {
    size_t index = 0;    ///< position of the winning candidate
    double alpha = 0.0;  ///< its level
    std::vector<double> scores;
};

/// Score each candidate graph (a PDAG; extended to a member DAG first) and
/// pick the lowest BIC; exact ties keep the earliest (smallest) level.
BicSelection bic_select(const Dataset& data, const std::vector<double>& alphas,
                        const std::vector<MixedGraph>& graphs);

/// Raw per-replication CSV:
///   d,n,rep,method,alpha,shd,f1,mcc,time_ms
/// With include_times = false the time column is written as 0 so reruns are
/// byte-identical. NaN alpha is written as an empty field.
void write_raw_csv(std::ostream& out, const BenchResults& results, bool include_times);

std::vector<MethodSummary> summarize(const BenchResults& results);

/// Machine-readable summary (config echo plus per-cell method averages).
std::string summary_json(const BenchResults& results);

/// Human-readable fixed-width table of the same summary.
void write_summary_table(std::ostream& out, const BenchResults& results);

}  // namespace autopc
