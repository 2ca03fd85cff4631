#include "autopc/autopc.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "autopc/metrics.hpp"

namespace autopc {

namespace {

constexpr double kPerfectSlack = 1e-12;

AlphaEvaluation evaluate_alpha(CiTest& test, double alpha, int max_cond_size) {
    PcConfig cfg;
    cfg.alpha = alpha;
    cfg.max_cond_size = max_cond_size;
    PcRunStats s1, s2;
    AlphaEvaluation e;
    e.alpha = alpha;
    e.first = run_pc(test, cfg, &s1);
    e.second = run_pc_restricted(test, cfg, e.first, &s2);
    e.first_summary = GraphSummary{e.first.num_edges(), s1.ci_tests, s1.wall_seconds};
    e.second_summary = GraphSummary{e.second.num_edges(), s2.ci_tests, s2.wall_seconds};
    return e;
}

// Incremental ascending scan with strict improvement, so the smallest level
// wins ties. feed() returns false once scanning may stop.
class SelectionScan {
public:
    bool feed(const AlphaEvaluation& e, const MetricFn& metric, bool early_break) {
        const double score = metric(e.second, e.first);
        trace_.push_back(TraceEntry{e.alpha, score, e.first_summary, e.second_summary});
        if (!has_best_ || score > best_score_) {
            has_best_ = true;
            best_score_ = score;
            best_alpha_ = e.alpha;
            best_graph_ = e.first;
        }
        return !(early_break && best_score_ >= 1.0 - kPerfectSlack);
    }

    SelectionResult result() && {
        if (!has_best_) throw std::logic_error("selection scan saw no candidates");
        return SelectionResult{std::move(best_graph_), best_alpha_, best_score_,
                               std::move(trace_)};
    }

private:
    bool has_best_ = false;
    double best_score_ = 0.0;
    double best_alpha_ = 0.0;
    MixedGraph best_graph_{0};
    std::vector<TraceEntry> trace_;
};

void validate_inputs(const AutoPcOptions& opts, const MetricFn& metric) {
    opts.grid.validate();
    if (!metric) throw std::invalid_argument("metric function is empty");
}

}  // namespace

AlphaGrid AlphaGrid::default_grid() {
    return AlphaGrid{{0.0005, 0.001, 0.005, 0.01, 0.05, 0.1}};
}

void AlphaGrid::validate() const {
    if (values.empty()) throw std::invalid_argument("alpha grid is empty");
    for (size_t k = 0; k < values.size(); ++k) {
        if (!(values[k] > 0.0) || !(values[k] < 1.0))
            throw std::invalid_argument("alpha grid values must lie strictly between 0 and 1");
        if (k > 0 && values[k] <= values[k - 1])
            throw std::invalid_argument("alpha grid must be strictly ascending");
    }
}

const std::map<std::string, MetricFn>& metric_registry() {
    static const std::map<std::string, MetricFn> registry = {
        {"nshd",
         [](const MixedGraph& e, const MixedGraph& r) { return normalized_shd(e, r); }},
        {"f1",
         [](const MixedGraph& e, const MixedGraph& r) { return f1(edge_confusion(e, r)); }},
        {"mcc",
         [](const MixedGraph& e, const MixedGraph& r) {
             const EdgeConfusion c = edge_confusion(e, r);
             // Identical adjacency is perfect agreement even when the raw
             // correlation is undefined (empty or complete graphs).
             if (c.fp == 0 && c.fn == 0) return 1.0;
             return (mcc(c) + 1.0) / 2.0;
         }},
    };
    return registry;
}

const MetricFn& metric_by_name(const std::string& name) {
    const auto& registry = metric_registry();
    const auto it = registry.find(name);
    if (it == registry.end()) {
        std::string known;
        for (const auto& [key, fn] : registry) {
            if (!known.empty()) known += ", ";
            known += key;
        }
        throw std::invalid_argument("unknown metric '" + name + "' (known: " + known + ")");
    }
    return it->second;
}

SelectionResult autopc(CiTest& test, const MetricFn& metric, const AutoPcOptions& opts) {
    validate_inputs(opts, metric);
    SelectionScan scan;
    for (double alpha : opts.grid.values) {
        const AlphaEvaluation e = evaluate_alpha(test, alpha, opts.max_cond_size);
        if (!scan.feed(e, metric, opts.early_break)) break;
    }
    return std::move(scan).result();
}

std::vector<AlphaEvaluation> evaluate_alpha_grid(CiTest& test, const AutoPcOptions& opts) {
    opts.grid.validate();
    std::vector<AlphaEvaluation> evals;
    evals.reserve(opts.grid.values.size());
    for (double alpha : opts.grid.values)
        evals.push_back(evaluate_alpha(test, alpha, opts.max_cond_size));
    return evals;
}

SelectionResult select_from(const std::vector<AlphaEvaluation>& evaluations,
                            const MetricFn& metric, bool early_break) {
    if (evaluations.empty()) throw std::invalid_argument("no evaluations to select from");
    if (!metric) throw std::invalid_argument("metric function is empty");
    SelectionScan scan;
    for (const auto& e : evaluations)
        if (!scan.feed(e, metric, early_break)) break;
    return std::move(scan).result();
}

SelectionResult autopc_parallel(const CiTestFactory& factory, const MetricFn& metric,
                                int jobs, const AutoPcOptions& opts) {
    validate_inputs(opts, metric);
    if (!factory) throw std::invalid_argument("test factory is empty");
    if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");

    const size_t n = opts.grid.values.size();
    std::vector<std::optional<AlphaEvaluation>> slots(n);
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    const size_t workers = std::min(static_cast<size_t>(jobs), n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&]() {
            try {
                const std::unique_ptr<CiTest> test = factory();
                if (!test) throw std::invalid_argument("test factory returned null");
                for (size_t k = next.fetch_add(1); k < n; k = next.fetch_add(1))
                    slots[k] = evaluate_alpha(*test, opts.grid.values[k], opts.max_cond_size);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    std::vector<AlphaEvaluation> evals;
    evals.reserve(n);
    for (auto& slot : slots) evals.push_back(std::move(*slot));
    return select_from(evals, metric, opts.early_break);
}

}  // namespace autopc
