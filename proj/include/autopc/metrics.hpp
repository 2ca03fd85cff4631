#pragma once

#include "autopc/graph.hpp"

namespace autopc {

/// Adjacency-level confusion counts over unordered vertex pairs; edge
/// orientation is ignored.
struct EdgeConfusion {
    long long tp = 0;
    long long fp = 0;
    long long fn = 0;
    long long tn = 0;
};

/// Structural Hamming distance: one unit per unordered pair whose state
/// (absent, undirected, or either direction) differs between the graphs.
int shd(const MixedGraph& a, const MixedGraph& b);

/// SHD rescaled to [0, 1] with 1 meaning identical:
/// 1 - shd / (d * (d - 1) / 2).
double normalized_shd(const MixedGraph& a, const MixedGraph& b);

EdgeConfusion edge_confusion(const MixedGraph& estimate, const MixedGraph& reference);

/// F1 over adjacency detection; defined as 1 when there is nothing to detect
/// and nothing was claimed (tp = fp = fn = 0).
double f1(const EdgeConfusion& c);

/// Matthews correlation over adjacency detection, in [-1, 1]; returns 0 when
/// any marginal is empty so the quotient is undefined.
double mcc(const EdgeConfusion& c);

}  // namespace autopc
