#pragma once

#include <Eigen/Dense>
#include <random>

#include "autopc/dataset.hpp"
#include "autopc/graph.hpp"

namespace autopc {

/// Edge-coefficient magnitudes are drawn uniformly from [lo, hi]; the sign
/// is positive or negative with equal probability.
struct CoefInterval {
    double lo = 0.3;
    double hi = 1.3;
};

/// DAG together with its linear edge coefficients: weights(t, h) is the
/// coefficient on t in the equation for h, nonzero exactly when t -> h.
struct WeightedDag {
    MixedGraph dag;
    Eigen::MatrixXd weights;
};

/// Random DAG over d vertices: a uniformly random topological order, then
/// each forward pair becomes an edge independently with probability
/// expected_degree / (d - 1), giving the requested expected total degree.
WeightedDag gen_random_dag(int d, double expected_degree, std::mt19937_64& rng,
                           const CoefInterval& coefs = {});

/// n samples from the linear structural model X_v = sum_p w(p, v) X_p + e_v
/// with independent standard normal noise. Columns are named X1..Xd.
Dataset sample_sem(const WeightedDag& model, int n, std::mt19937_64& rng);

}  // namespace autopc
