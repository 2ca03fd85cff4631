#pragma once

#include <stdexcept>

#include "autopc/ci_test.hpp"
#include "autopc/graph.hpp"

namespace autopc {

struct PcConfig {
    double alpha = 0.05;
    /// Largest conditioning-set size to try; -1 means unbounded.
    int max_cond_size = -1;

    void validate() const {
        if (!(alpha > 0.0) || !(alpha < 1.0))
            throw std::invalid_argument("alpha must lie strictly between 0 and 1");
        if (max_cond_size < -1)
            throw std::invalid_argument("max_cond_size must be -1 (unbounded) or >= 0");
    }
};

struct PcRunStats {
    long long ci_tests = 0;
    int max_level = 0;
    double wall_seconds = 0.0;
};

struct SkeletonResult {
    MixedGraph skeleton;
    SepsetMap sepsets;
    PcRunStats stats;
};

/// Stable skeleton search: starts from the complete undirected graph and, at
/// each conditioning size l, freezes the adjacency sets so deletions inside a
/// level cannot influence which sets are tried at that level. Ordered pairs
/// (i, j) are scanned with both orders, except at size 0 where both orders
/// pose the identical marginal query and each unordered pair is tested once.
/// Conditioning sets are drawn from the frozen neighbourhood of i minus j, in
/// lexicographic order, and the first set with p > alpha deletes the edge and
/// is recorded as its separating set.
SkeletonResult skeleton_stable(CiTest& test, const PcConfig& config);

/// Same search but conditioning sets for the ordered pair (i, j) are drawn
/// only from frozen neighbours of i that are also parents of i in `prior`
/// (directed in, or undirected-adjacent). With a complete undirected prior
/// this reduces exactly to skeleton_stable.
SkeletonResult skeleton_restricted(CiTest& test, const PcConfig& config,
                                   const MixedGraph& prior);

/// Full constraint-based search: stable skeleton, collider orientation from
/// the recorded separating sets, then closure under the orientation rules.
MixedGraph run_pc(CiTest& test, const PcConfig& config, PcRunStats* stats = nullptr);

/// Full search with the conditioning pools restricted by `prior` as in
/// skeleton_restricted.
MixedGraph run_pc_restricted(CiTest& test, const PcConfig& config, const MixedGraph& prior,
                             PcRunStats* stats = nullptr);

}  // namespace autopc
