#include "autopc/pc.hpp"

#include <algorithm>
#include <chrono>
#include <optional>

#include "autopc/graph_algorithms.hpp"

namespace autopc {

namespace {

// Lexicographic fixed-size subset enumerator over a sorted pool.
class Combinations {
public:
    Combinations(const std::vector<int>& pool, int k)
        : pool_(pool), k_(k), idx_(static_cast<size_t>(k)) {
        done_ = k > static_cast<int>(pool.size());
        for (int t = 0; t < k; ++t) idx_[static_cast<size_t>(t)] = t;
    }

    bool done() const { return done_; }

    std::vector<int> current() const {
        std::vector<int> out(static_cast<size_t>(k_));
        for (int t = 0; t < k_; ++t)
            out[static_cast<size_t>(t)] = pool_[static_cast<size_t>(idx_[static_cast<size_t>(t)])];
        return out;
    }

    void next() {
        if (k_ == 0) {
            done_ = true;
            return;
        }
        const int n = static_cast<int>(pool_.size());
        int t = k_ - 1;
        while (t >= 0 && idx_[static_cast<size_t>(t)] == n - k_ + t) --t;
        if (t < 0) {
            done_ = true;
            return;
        }
        ++idx_[static_cast<size_t>(t)];
        for (int u = t + 1; u < k_; ++u)
            idx_[static_cast<size_t>(u)] = idx_[static_cast<size_t>(u - 1)] + 1;
    }

private:
    const std::vector<int>& pool_;
    int k_;
    std::vector<int> idx_;
    bool done_ = false;
};

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> erase_value(std::vector<int> v, int x) {
    v.erase(std::remove(v.begin(), v.end(), x), v.end());
    return v;
}

SkeletonResult skeleton_impl(CiTest& test, const PcConfig& config,
                             const MixedGraph* prior) {
    config.validate();
    const int d = test.num_variables();
    if (prior && prior->num_vertices() != d)
        throw std::invalid_argument("prior graph size does not match test variable count");

    const auto start = std::chrono::steady_clock::now();
    const long long count_start = test.call_count();

    MixedGraph g = MixedGraph::complete_undirected(d);
    SepsetMap sepsets;
    PcRunStats stats;

    // Parent pools induced by the prior are fixed for the whole run.
    std::vector<std::vector<int>> prior_parents;
    if (prior) {
        prior_parents.resize(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) prior_parents[static_cast<size_t>(i)] = parents_in_pdag(*prior, i);
    }

    const auto pool_of = [&](const std::vector<std::vector<int>>& adj, int i, int j) {
        const auto& base = prior
            ? sorted_intersection(adj[static_cast<size_t>(i)], prior_parents[static_cast<size_t>(i)])
            : adj[static_cast<size_t>(i)];
        return erase_value(base, j);
    };

    for (int level = 0;; ++level) {
        if (config.max_cond_size >= 0 && level > config.max_cond_size) break;

        // Stop once no ordered adjacent pair can supply a conditioning set of
        // this size; checked against the live adjacency.
        std::vector<std::vector<int>> adj_live(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) adj_live[static_cast<size_t>(i)] = g.adjacent(i);
        bool feasible = false;
        for (int i = 0; i < d && !feasible; ++i) {
            for (int j : adj_live[static_cast<size_t>(i)]) {
                if (static_cast<int>(pool_of(adj_live, i, j).size()) >= level) {
                    feasible = true;
                    break;
                }
            }
        }
        if (!feasible) break;
        stats.max_level = level;

        // Freeze the adjacency structure for this level.
        const std::vector<std::vector<int>> adj_frozen = adj_live;

        for (int i = 0; i < d; ++i) {
            for (int j : adj_frozen[static_cast<size_t>(i)]) {
                // Both orders pose the identical marginal query at size 0, so
                // each unordered pair is tested once there.
                if (level == 0 && j < i) continue;
                if (!g.has_edge(i, j)) continue;  // removed earlier in this level
                const std::vector<int> pool = pool_of(adj_frozen, i, j);
                if (static_cast<int>(pool.size()) < level) continue;
                for (Combinations comb(pool, level); !comb.done(); comb.next()) {
                    const std::vector<int> w = comb.current();
                    double p = 0.0;
                    try {
                        p = test.test(i, j, w);
                    } catch (const SampleSizeError&) {
                        continue;
                    }
                    if (p > config.alpha) {
                        g.remove_edge(i, j);
                        sepsets.set(i, j, w);
                        break;
                    }
                }
            }
        }
    }

    stats.ci_tests = test.call_count() - count_start;
    stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return SkeletonResult{std::move(g), std::move(sepsets), stats};
}

MixedGraph run_impl(CiTest& test, const PcConfig& config, const MixedGraph* prior,
                    PcRunStats* stats) {
    const auto start = std::chrono::steady_clock::now();
    SkeletonResult sk = skeleton_impl(test, config, prior);
    MixedGraph out = apply_meek_rules(orient_colliders(sk.skeleton, sk.sepsets));
    if (stats) {
        *stats = sk.stats;
        stats->wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    return out;
}

}  // namespace

SkeletonResult skeleton_stable(CiTest& test, const PcConfig& config) {
    return skeleton_impl(test, config, nullptr);
}

SkeletonResult skeleton_restricted(CiTest& test, const PcConfig& config,
                                   const MixedGraph& prior) {
    return skeleton_impl(test, config, &prior);
}

MixedGraph run_pc(CiTest& test, const PcConfig& config, PcRunStats* stats) {
    return run_impl(test, config, nullptr, stats);
}

MixedGraph run_pc_restricted(CiTest& test, const PcConfig& config, const MixedGraph& prior,
                             PcRunStats* stats) {
    return run_impl(test, config, &prior, stats);
}

}  // namespace autopc
