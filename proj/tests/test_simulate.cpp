#include <doctest.h>

#include <cmath>
#include <random>

#include "autopc/simulate.hpp"

using autopc::CoefInterval;
using autopc::Dataset;
using autopc::MixedGraph;
using autopc::WeightedDag;

TEST_CASE("generated graphs are DAGs with weights exactly on the edges") {
    std::mt19937_64 rng(1);
    for (int rep = 0; rep < 200; ++rep) {
        const WeightedDag m = autopc::gen_random_dag(10, 2.0, rng);
        CHECK(m.dag.is_dag());
        for (int i = 0; i < 10; ++i) {
            for (int j = 0; j < 10; ++j) {
                if (i == j) {
                    CHECK(m.weights(i, j) == 0.0);
                } else if (m.dag.has_directed(i, j)) {
                    const double w = std::abs(m.weights(i, j));
                    CHECK(w >= 0.3);
                    CHECK(w <= 1.3);
                } else {
                    CHECK(m.weights(i, j) == 0.0);
                }
            }
        }
    }
}

TEST_CASE("edge count concentrates around the expected degree") {
    std::mt19937_64 rng(2);
    double total = 0.0;
    const int reps = 400;
    for (int rep = 0; rep < reps; ++rep)
        total += autopc::gen_random_dag(10, 2.0, rng).dag.num_edges();
    // Expected edges = d * degree / 2 = 10; the mean of 400 draws is within
    // a few standard errors.
    CHECK(total / reps == doctest::Approx(10.0).epsilon(0.08));
}

TEST_CASE("both coefficient signs occur") {
    std::mt19937_64 rng(3);
    int pos = 0, neg = 0;
    for (int rep = 0; rep < 50; ++rep) {
        const WeightedDag m = autopc::gen_random_dag(8, 3.0, rng);
        for (const auto& e : m.dag.edges()) {
            (m.weights(e.a, e.b) > 0 ? pos : neg) += 1;
        }
    }
    CHECK(pos > 100);
    CHECK(neg > 100);
}

TEST_CASE("generation is deterministic in the seed") {
    std::mt19937_64 a(77), b(77), c(78);
    const WeightedDag first = autopc::gen_random_dag(10, 2.0, a);
    const WeightedDag second = autopc::gen_random_dag(10, 2.0, b);
    const WeightedDag third = autopc::gen_random_dag(10, 2.0, c);
    CHECK(first.dag == second.dag);
    CHECK(first.weights == second.weights);
    CHECK(first.dag != third.dag);  // astronomically unlikely to collide
}

TEST_CASE("degenerate sizes and intervals are rejected") {
    std::mt19937_64 rng(4);
    CHECK_THROWS_AS(autopc::gen_random_dag(0, 2.0, rng), std::invalid_argument);
    CHECK_THROWS_AS(autopc::gen_random_dag(5, -1.0, rng), std::invalid_argument);
    CHECK_THROWS_AS(autopc::gen_random_dag(5, 2.0, rng, CoefInterval{0.0, 1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(autopc::gen_random_dag(5, 2.0, rng, CoefInterval{1.0, 0.5}),
                    std::invalid_argument);
    const WeightedDag single = autopc::gen_random_dag(1, 2.0, rng);
    CHECK(single.dag.num_edges() == 0);
}

TEST_CASE("samples carry default names and the right shape") {
    std::mt19937_64 rng(5);
    const WeightedDag m = autopc::gen_random_dag(4, 1.5, rng);
    const Dataset data = autopc::sample_sem(m, 50, rng);
    CHECK(data.num_rows() == 50);
    CHECK(data.num_cols() == 4);
    CHECK(data.names() == std::vector<std::string>{"X1", "X2", "X3", "X4"});
    CHECK_THROWS_AS(autopc::sample_sem(m, 0, rng), std::invalid_argument);
}

TEST_CASE("an edgeless model yields independent standard normals") {
    std::mt19937_64 rng(6);
    const WeightedDag m{MixedGraph(3), Eigen::MatrixXd::Zero(3, 3)};
    const Dataset data = autopc::sample_sem(m, 20000, rng);
    for (int j = 0; j < 3; ++j) {
        const auto col = data.values().col(j);
        CHECK(std::abs(col.mean()) < 0.03);  // ~4 standard errors
        const double var = (col.array() - col.mean()).square().sum() / 19999.0;
        CHECK(var == doctest::Approx(1.0).epsilon(0.05));
    }
}

TEST_CASE("a weighted chain reproduces its implied covariance") {
    // X1 = e1, X2 = 0.8 X1 + e2: var(X1) = 1, var(X2) = 1.64, cov = 0.8.
    WeightedDag m{MixedGraph(2), Eigen::MatrixXd::Zero(2, 2)};
    m.dag.set_directed(0, 1);
    m.weights(0, 1) = 0.8;
    std::mt19937_64 rng(7);
    const Dataset data = autopc::sample_sem(m, 50000, rng);
    const auto x = data.values();
    const Eigen::MatrixXd centered = x.rowwise() - x.colwise().mean();
    const Eigen::MatrixXd cov = centered.transpose() * centered / 49999.0;
    CHECK(cov(0, 0) == doctest::Approx(1.0).epsilon(0.05));
    CHECK(cov(1, 1) == doctest::Approx(1.64).epsilon(0.05));
    CHECK(cov(0, 1) == doctest::Approx(0.8).epsilon(0.05));
}

TEST_CASE("sampling follows any topological order, not the vertex order") {
    // Edge 2 -> 0: vertex 0 is downstream of vertex 2.
    WeightedDag m{MixedGraph(3), Eigen::MatrixXd::Zero(3, 3)};
    m.dag.set_directed(2, 0);
    m.weights(2, 0) = 1.0;
    std::mt19937_64 rng(8);
    const Dataset data = autopc::sample_sem(m, 30000, rng);
    const auto x = data.values();
    const Eigen::MatrixXd centered = x.rowwise() - x.colwise().mean();
    const double cov20 = (centered.col(2).dot(centered.col(0))) / 29999.0;
    CHECK(cov20 == doctest::Approx(1.0).epsilon(0.05));
}
