#include <CLI11.hpp>

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "autopc/autopc.hpp"
#include "autopc/bench.hpp"
#include "autopc/ci_test.hpp"
#include "autopc/dataset.hpp"
#include "autopc/graph_algorithms.hpp"
#include "autopc/graph_io.hpp"
#include "autopc/metrics.hpp"
#include "autopc/pc.hpp"
#include "autopc/simulate.hpp"

namespace {

unsigned long long seed_from_env_or(unsigned long long fallback) {
    const char* env = std::getenv("AUTOPC_SEED");
    if (!env || *env == '\0') return fallback;
    errno = 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (errno != 0 || end == env || *end != '\0')
        throw std::invalid_argument("AUTOPC_SEED must be a non-negative integer");
    return v;
}

void emit_graph(const std::string& out_path, const autopc::NamedGraph& g) {
    if (out_path == "-")
        std::cout << autopc::graph_to_text(g);
    else
        autopc::write_graph_file(out_path, g);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw autopc::DataError("cannot open '" + path + "' for writing");
    return out;
}

void write_trace_csv(const std::string& path, const autopc::SelectionResult& r) {
    std::ofstream out = open_out(path);
    out << "alpha,score,edges_first,edges_second,ci_tests_first,ci_tests_second,"
           "time_ms_first,time_ms_second\n";
    for (const auto& t : r.trace) {
        out << t.alpha << ',' << t.score << ',' << t.first_run.num_edges << ','
            << t.second_run.num_edges << ',' << t.first_run.ci_tests << ','
            << t.second_run.ci_tests << ',' << t.first_run.wall_seconds * 1000.0 << ','
            << t.second_run.wall_seconds * 1000.0 << '\n';
    }
    if (!out) throw autopc::DataError("failed writing '" + path + "'");
}

struct DiscoverArgs {
    std::string data_path;
    std::string out_path = "-";
    std::string dag_path;
    std::string trace_path;
    std::string metric = "nshd";
    std::vector<double> grid;
    double alpha = 0.0;
    int max_cond_size = -1;
    int jobs = 1;
};

void run_discover(const DiscoverArgs& a, bool fixed_alpha) {
    const autopc::Dataset data = autopc::read_csv_file(a.data_path);

    if (fixed_alpha) {
        autopc::PcConfig cfg;
        cfg.alpha = a.alpha;
        cfg.max_cond_size = a.max_cond_size;
        cfg.validate();
        autopc::FisherZTest test(data);
        autopc::PcRunStats stats;
        const autopc::MixedGraph g = autopc::run_pc(test, cfg, &stats);
        std::cerr << "level " << a.alpha << ": " << g.num_edges() << " edges, "
                  << stats.ci_tests << " tests\n";
        const autopc::NamedGraph named{data.names(), g};
        emit_graph(a.out_path, named);
        if (!a.dag_path.empty())
            autopc::write_graph_file(a.dag_path,
                                     {data.names(), autopc::extend_to_dag(g)});
        return;
    }

    autopc::AutoPcOptions opts;
    if (!a.grid.empty()) opts.grid = autopc::AlphaGrid{a.grid};
    opts.max_cond_size = a.max_cond_size;
    const autopc::MetricFn& metric = autopc::metric_by_name(a.metric);

    autopc::SelectionResult r;
    if (a.jobs > 1) {
        // Materialize the correlation matrix before any worker can race on
        // the dataset's lazy cache.
        const Eigen::MatrixXd corr = data.correlations();
        const int n = data.num_rows();
        r = autopc::autopc_parallel(
            [corr, n]() { return std::make_unique<autopc::FisherZTest>(corr, n); }, metric,
            a.jobs, opts);
    } else {
        autopc::FisherZTest test(data);
        r = autopc::autopc(test, metric, opts);
    }

    std::cerr << "selected level " << r.alpha << " (agreement " << r.score << ", "
              << r.graph.num_edges() << " edges, " << r.trace.size()
              << " levels evaluated)\n";
    if (!a.trace_path.empty()) write_trace_csv(a.trace_path, r);
    const autopc::NamedGraph named{data.names(), r.graph};
    emit_graph(a.out_path, named);
    if (!a.dag_path.empty())
        autopc::write_graph_file(a.dag_path,
                                 {data.names(), autopc::extend_to_dag(r.graph)});
}

struct SimulateArgs {
    int d = 10;
    int n = 1000;
    double expected_degree = 2.0;
    double coef_lo = 0.3;
    double coef_hi = 1.3;
    unsigned long long seed = 1;
    std::string data_path;
    std::string graph_path;
    std::string cpdag_path;
};

void run_simulate(const SimulateArgs& a) {
    std::mt19937_64 rng(a.seed);
    const autopc::WeightedDag model =
        autopc::gen_random_dag(a.d, a.expected_degree, rng, {a.coef_lo, a.coef_hi});
    const autopc::Dataset data = autopc::sample_sem(model, a.n, rng);
    autopc::write_csv_file(a.data_path, data);
    if (!a.graph_path.empty())
        autopc::write_graph_file(a.graph_path, {data.names(), model.dag});
    if (!a.cpdag_path.empty())
        autopc::write_graph_file(a.cpdag_path,
                                 {data.names(), autopc::dag_to_cpdag(model.dag)});
    std::cerr << "d=" << a.d << " n=" << a.n << " seed=" << a.seed << ": "
              << model.dag.num_edges() << " edges -> " << a.data_path << '\n';
}

struct BenchArgs {
    autopc::ExperimentConfig config;
    std::vector<double> grid;
    std::string raw_csv_path;
    std::string summary_json_path;
    std::string times = "wall";
};

void run_bench(const BenchArgs& a) {
    autopc::ExperimentConfig config = a.config;
    if (!a.grid.empty()) config.grid = autopc::AlphaGrid{a.grid};
    const autopc::BenchResults results = autopc::run_experiment(config);
    if (!a.raw_csv_path.empty()) {
        std::ofstream out = open_out(a.raw_csv_path);
        autopc::write_raw_csv(out, results, a.times == "wall");
        if (!out) throw autopc::DataError("failed writing '" + a.raw_csv_path + "'");
    }
    if (!a.summary_json_path.empty()) {
        std::ofstream out = open_out(a.summary_json_path);
        out << autopc::summary_json(results);
        if (!out) throw autopc::DataError("failed writing '" + a.summary_json_path + "'");
    }
    autopc::write_summary_table(std::cout, results);
}

struct MetricsArgs {
    std::string estimate_path;
    std::string reference_path;
    bool as_json = false;
};

void run_metrics(const MetricsArgs& a) {
    const autopc::NamedGraph est = autopc::read_graph_file(a.estimate_path);
    const autopc::NamedGraph ref = autopc::read_graph_file(a.reference_path);
    const autopc::NamedGraph aligned = autopc::align_to_names(est, ref.names);

    const int s = autopc::shd(aligned.graph, ref.graph);
    const double ns = autopc::normalized_shd(aligned.graph, ref.graph);
    const autopc::EdgeConfusion c = autopc::edge_confusion(aligned.graph, ref.graph);
    const double f = autopc::f1(c);
    const double m = autopc::mcc(c);

    if (a.as_json) {
        std::cout << "{\"shd\": " << s << ", \"nshd\": " << ns << ", \"f1\": " << f
                  << ", \"mcc\": " << m << ", \"tp\": " << c.tp << ", \"fp\": " << c.fp
                  << ", \"fn\": " << c.fn << ", \"tn\": " << c.tn << "}\n";
    } else {
        std::cout << "shd: " << s << "\nnshd: " << ns << "\nf1: " << f << "\nmcc: " << m
                  << "\nadjacency tp/fp/fn/tn: " << c.tp << '/' << c.fp << '/' << c.fn << '/'
                  << c.tn << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constraint-based causal discovery with automatic level selection"};
    app.require_subcommand(1);

    DiscoverArgs da;
    CLI::App* discover = app.add_subcommand(
        "discover", "Estimate a causal graph from a CSV sample");
    discover->add_option("--data", da.data_path, "input CSV with a header row of names")
        ->required();
    discover->add_option("--out", da.out_path, "output graph file, or - for stdout");
    discover->add_option("--out-dag", da.dag_path, "also write a member DAG extension");
    discover->add_option("--trace", da.trace_path, "write the per-level selection trace CSV");
    discover->add_option("--metric", da.metric, "agreement metric (nshd, f1, mcc)");
    CLI::Option* alpha_opt = discover->add_option(
        "--alpha", da.alpha, "run at this fixed level instead of selecting one");
    discover->add_option("--grid", da.grid, "candidate levels, ascending")->delimiter(',');
    discover->add_option("--max-cond-size", da.max_cond_size,
                         "largest conditioning-set size (-1 = unbounded)");
    discover->add_option("--jobs", da.jobs, "worker threads for level evaluation");

    SimulateArgs sa;
    CLI::App* simulate = app.add_subcommand(
        "simulate", "Sample a random linear-Gaussian model");
    simulate->add_option("--d", sa.d, "number of variables")->required();
    simulate->add_option("--n", sa.n, "number of samples")->required();
    simulate->add_option("--expected-degree", sa.expected_degree,
                         "expected total degree per vertex");
    simulate->add_option("--coef-lo", sa.coef_lo, "smallest coefficient magnitude");
    simulate->add_option("--coef-hi", sa.coef_hi, "largest coefficient magnitude");
    CLI::Option* sim_seed = simulate->add_option("--seed", sa.seed, "RNG seed");
    simulate->add_option("--out-data", sa.data_path, "output CSV path")->required();
    simulate->add_option("--out-graph", sa.graph_path, "write the true DAG here");
    simulate->add_option("--out-cpdag", sa.cpdag_path,
                         "write the true equivalence class here");

    BenchArgs ba;
    CLI::App* bench = app.add_subcommand(
        "bench", "Synthetic benchmark of level-selection strategies");
    CLI::Option* bench_seed =
        bench->add_option("--seed", ba.config.master_seed, "master RNG seed");
    bench->add_option("--reps", ba.config.reps, "replications per cell");
    bench->add_option("--dims", ba.config.dims, "variable counts")->delimiter(',');
    bench->add_option("--sample-sizes", ba.config.sample_sizes, "sample sizes")
        ->delimiter(',');
    bench->add_option("--grid", ba.grid, "candidate levels, ascending")->delimiter(',');
    bench->add_option("--expected-degree", ba.config.expected_degree,
                      "expected total degree per vertex");
    bench->add_option("--max-cond-size", ba.config.max_cond_size,
                      "largest conditioning-set size (-1 = unbounded)");
    bench->add_option("--jobs", ba.config.jobs, "worker threads over replications");
    bench->add_option("--raw-csv", ba.raw_csv_path, "write per-replication rows here");
    bench->add_option("--summary-json", ba.summary_json_path, "write summary JSON here");
    bench->add_option("--times", ba.times, "time column: wall, or none for zeros")
        ->check(CLI::IsMember({"wall", "none"}));

    MetricsArgs ma;
    CLI::App* metrics = app.add_subcommand(
        "metrics", "Compare two graph files (vertices matched by name)");
    metrics->add_option("estimate", ma.estimate_path, "estimated graph file")->required();
    metrics->add_option("reference", ma.reference_path, "reference graph file")->required();
    metrics->add_flag("--json", ma.as_json, "print a JSON object");

    try {
        app.parse(argc, argv);
        if (discover->parsed()) run_discover(da, alpha_opt->count() > 0);
        if (simulate->parsed()) {
            if (sim_seed->count() == 0) sa.seed = seed_from_env_or(sa.seed);
            run_simulate(sa);
        }
        if (bench->parsed()) {
            if (bench_seed->count() == 0)
                ba.config.master_seed = seed_from_env_or(ba.config.master_seed);
            run_bench(ba);
        }
        if (metrics->parsed()) run_metrics(ma);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const autopc::DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const autopc::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
