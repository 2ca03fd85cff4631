#pragma once

// Independent reference implementations used only to cross-check the library:
// brute-force path enumeration for d-separation, exhaustive DAG enumeration,
// and the regression-residual route to partial correlation. Deliberately
// naive — correctness over speed.

#include <Eigen/Dense>
#include <array>
#include <random>
#include <vector>

#include "autopc/graph.hpp"

namespace oracles {

using autopc::MixedGraph;

/// Every DAG on d labelled vertices (3^(d(d-1)/2) candidates, acyclic kept).
/// Practical for d <= 4.
std::vector<MixedGraph> all_dags(int d);

/// Random DAG: random topological order, each forward pair kept with
/// probability edge_prob.
MixedGraph random_dag(int d, double edge_prob, std::mt19937_64& rng);

/// Random mixed graph with no directed cycle: a random DAG with each edge
/// made undirected with probability undirect_prob.
MixedGraph random_pdag(int d, double edge_prob, double undirect_prob,
                       std::mt19937_64& rng);

/// d-separation decided by enumerating every simple path between i and j and
/// checking the blocking rule node by node: a non-collider blocks when it is
/// conditioned on, a collider blocks unless it or one of its descendants is.
bool d_separated_paths(const MixedGraph& dag, int i, int j, const std::vector<int>& w);

/// Unshielded colliders a -> k <- b with a, b non-adjacent, as (min, k, max),
/// sorted.
std::vector<std::array<int, 3>> unshielded_colliders(const MixedGraph& dag);

/// Undirected copy of the adjacency structure.
MixedGraph skeleton_of(const MixedGraph& g);

/// Partial correlation of columns i and j given columns w, via the
/// regression-residual route: residualize both on [1, X_w], then correlate.
double partial_corr_residual(const Eigen::MatrixXd& x, int i, int j,
                             const std::vector<int>& w);

/// p-value of the z-transformed partial correlation (two-sided).
double fisher_p_from_r(double r, int n, int cond_size);

}  // namespace oracles
