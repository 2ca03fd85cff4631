#include "autopc/simulate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "autopc/graph_algorithms.hpp"
#include "autopc/graph_io.hpp"

namespace autopc {

WeightedDag gen_random_dag(int d, double expected_degree, std::mt19937_64& rng,
                           const CoefInterval& coefs) {
    if (d < 1) throw std::invalid_argument("need at least one vertex");
    if (expected_degree < 0.0) throw std::invalid_argument("expected degree must be >= 0");
    if (!(coefs.lo > 0.0) || !(coefs.hi >= coefs.lo))
        throw std::invalid_argument("coefficient interval must satisfy 0 < lo <= hi");

    WeightedDag out{MixedGraph(d), Eigen::MatrixXd::Zero(d, d)};
    if (d == 1) return out;

    std::vector<int> order(static_cast<size_t>(d));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    const double p = std::min(1.0, expected_degree / static_cast<double>(d - 1));
    std::bernoulli_distribution include(p);
    std::bernoulli_distribution negative(0.5);
    std::uniform_real_distribution<double> magnitude(coefs.lo, coefs.hi);

    for (int a = 0; a < d; ++a) {
        for (int b = a + 1; b < d; ++b) {
            if (!include(rng)) continue;
            const int tail = order[static_cast<size_t>(a)];
            const int head = order[static_cast<size_t>(b)];
            out.dag.set_directed(tail, head);
            const double w = magnitude(rng) * (negative(rng) ? -1.0 : 1.0);
            out.weights(tail, head) = w;
        }
    }
    return out;
}

Dataset sample_sem(const WeightedDag& model, int n, std::mt19937_64& rng) {
    if (n < 1) throw std::invalid_argument("need at least one sample");
    const int d = model.dag.num_vertices();
    if (!model.dag.is_dag()) throw std::invalid_argument("model graph must be a DAG");
    if (model.weights.rows() != d || model.weights.cols() != d)
        throw std::invalid_argument("weight matrix shape does not match graph");

    Eigen::MatrixXd x(n, d);
    std::normal_distribution<double> noise(0.0, 1.0);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < n; ++i) x(i, j) = noise(rng);

    for (int v : topological_order(model.dag)) {
        for (int p : model.dag.parents(v)) x.col(v) += model.weights(p, v) * x.col(p);
    }
    return Dataset(std::move(x), default_names(d));
}

}  // namespace autopc
