#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "autopc/graph.hpp"
#include "autopc/graph_algorithms.hpp"
#include "oracles.hpp"

using autopc::MixedGraph;
using autopc::SepsetMap;

namespace {

MixedGraph chain3() {  // 0 -> 1 -> 2
    MixedGraph g(3);
    g.set_directed(0, 1);
    g.set_directed(1, 2);
    return g;
}

MixedGraph collider3() {  // 0 -> 2 <- 1
    MixedGraph g(3);
    g.set_directed(0, 2);
    g.set_directed(1, 2);
    return g;
}

std::vector<std::vector<int>> all_subsets(const std::vector<int>& pool) {
    std::vector<std::vector<int>> subsets;
    for (size_t mask = 0; mask < (size_t{1} << pool.size()); ++mask) {
        std::vector<int> s;
        for (size_t t = 0; t < pool.size(); ++t)
            if (mask & (size_t{1} << t)) s.push_back(pool[t]);
        subsets.push_back(std::move(s));
    }
    return subsets;
}

}  // namespace

TEST_CASE("d-separation on the three textbook triples") {
    const MixedGraph chain = chain3();
    CHECK_FALSE(autopc::d_separated(chain, 0, 2, {}));
    CHECK(autopc::d_separated(chain, 0, 2, {1}));

    MixedGraph fork(3);  // 0 <- 1 -> 2
    fork.set_directed(1, 0);
    fork.set_directed(1, 2);
    CHECK_FALSE(autopc::d_separated(fork, 0, 2, {}));
    CHECK(autopc::d_separated(fork, 0, 2, {1}));

    const MixedGraph coll = collider3();
    CHECK(autopc::d_separated(coll, 0, 1, {}));
    CHECK_FALSE(autopc::d_separated(coll, 0, 1, {2}));
}

TEST_CASE("conditioning on a collider's descendant opens the path") {
    // 0 -> 2 <- 1, 2 -> 3
    MixedGraph g(4);
    g.set_directed(0, 2);
    g.set_directed(1, 2);
    g.set_directed(2, 3);
    CHECK(autopc::d_separated(g, 0, 1, {}));
    CHECK_FALSE(autopc::d_separated(g, 0, 1, {3}));
    CHECK_FALSE(autopc::d_separated(g, 0, 1, {2, 3}));
}

TEST_CASE("d-separation matches path enumeration on every 4-vertex DAG") {
    for (const MixedGraph& dag : oracles::all_dags(4)) {
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                std::vector<int> rest;
                for (int v = 0; v < 4; ++v)
                    if (v != i && v != j) rest.push_back(v);
                for (const auto& w : all_subsets(rest)) {
                    const bool fast = autopc::d_separated(dag, i, j, w);
                    const bool slow = oracles::d_separated_paths(dag, i, j, w);
                    REQUIRE_MESSAGE(fast == slow, "disagreement at i=", i, " j=", j);
                }
            }
        }
    }
}

TEST_CASE("d-separation matches path enumeration on random 8-vertex DAGs") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> pick(0, 7);
    for (int rep = 0; rep < 40; ++rep) {
        const MixedGraph dag = oracles::random_dag(8, 0.35, rng);
        for (int trial = 0; trial < 30; ++trial) {
            const int i = pick(rng);
            int j = pick(rng);
            while (j == i) j = pick(rng);
            std::vector<int> w;
            for (int v = 0; v < 8; ++v)
                if (v != i && v != j && pick(rng) < 3) w.push_back(v);
            CHECK(autopc::d_separated(dag, i, j, w) ==
                  oracles::d_separated_paths(dag, i, j, w));
        }
    }
}

TEST_CASE("d-separation validates its inputs") {
    const MixedGraph g = chain3();
    CHECK_THROWS_AS(autopc::d_separated(g, 0, 0, {}), std::invalid_argument);
    CHECK_THROWS_AS(autopc::d_separated(g, 0, 3, {}), std::invalid_argument);
    CHECK_THROWS_AS(autopc::d_separated(g, 0, 2, {0}), std::invalid_argument);
}

TEST_CASE("chain and fork collapse to one equivalence class, colliders stay") {
    const MixedGraph cp_chain = autopc::dag_to_cpdag(chain3());
    CHECK(cp_chain.num_undirected_edges() == 2);
    CHECK(cp_chain.num_directed_edges() == 0);

    const MixedGraph cp_coll = autopc::dag_to_cpdag(collider3());
    CHECK(cp_coll.has_directed(0, 2));
    CHECK(cp_coll.has_directed(1, 2));
}

TEST_CASE("equivalence classes match skeleton plus unshielded colliders (exhaustive d<=4)") {
    for (int d = 2; d <= 4; ++d) {
        const std::vector<MixedGraph> dags = oracles::all_dags(d);
        std::vector<MixedGraph> cpdags, skels;
        std::vector<std::vector<std::array<int, 3>>> colls;
        for (const auto& g : dags) {
            cpdags.push_back(autopc::dag_to_cpdag(g));
            skels.push_back(oracles::skeleton_of(g));
            colls.push_back(oracles::unshielded_colliders(g));
        }
        for (size_t a = 0; a < dags.size(); ++a) {
            for (size_t b = a + 1; b < dags.size(); ++b) {
                const bool same_class = cpdags[a] == cpdags[b];
                const bool same_marks = skels[a] == skels[b] && colls[a] == colls[b];
                REQUIRE(same_class == same_marks);
            }
        }
    }
}

TEST_CASE("dag_to_cpdag rejects non-DAG input") {
    MixedGraph g(3);
    g.set_undirected(0, 1);
    CHECK_THROWS_AS(autopc::dag_to_cpdag(g), std::invalid_argument);
}

TEST_CASE("collider orientation replays triples in a fixed order") {
    // Diamond skeleton 0-1, 0-2, 1-3, 2-3 with both non-adjacent pairs
    // separated by the empty set: triples are visited as (0,3,k=1), (0,3,k=2),
    // (1,2,k=0), (1,2,k=3), each orienting both arms toward the middle.
    MixedGraph skel(4);
    skel.set_undirected(0, 1);
    skel.set_undirected(0, 2);
    skel.set_undirected(1, 3);
    skel.set_undirected(2, 3);
    SepsetMap seps;
    seps.set(0, 3, {});
    seps.set(1, 2, {});

    const MixedGraph out = autopc::orient_colliders(skel, seps);
    CHECK(out.has_directed(1, 0));
    CHECK(out.has_directed(2, 0));
    CHECK(out.has_directed(1, 3));
    CHECK(out.has_directed(2, 3));
}

TEST_CASE("later triples overwrite earlier orientations") {
    // Path 0 - 2 - 1 plus 1 - 3 - 2 shielding nothing: sepsets make both
    // (0,1) and (0,3) unshielded with middles 2; the second triple re-orients
    // 2's arms. Construct: edges 0-2, 1-2, 2-3; pairs (0,1) sep {}, (0,3) sep {}.
    MixedGraph skel(4);
    skel.set_undirected(0, 2);
    skel.set_undirected(1, 2);
    skel.set_undirected(2, 3);
    SepsetMap seps;
    seps.set(0, 1, {});  // collider 0 -> 2 <- 1
    seps.set(0, 3, {});  // collider 0 -> 2 <- 3, re-orients 2 <- 3
    seps.set(1, 3, {2}); // middle in sepset: no collider for this triple

    const MixedGraph out = autopc::orient_colliders(skel, seps);
    CHECK(out.has_directed(0, 2));
    CHECK(out.has_directed(1, 2));
    CHECK(out.has_directed(3, 2));
}

TEST_CASE("collider orientation refuses to close a directed cycle") {
    // Start from a PDAG-like skeleton where orienting both arms of the only
    // unshielded triple would finish a directed 3-cycle. The helper works on
    // plain skeletons, so build the conflict through the sepset choice:
    // triangle-free path 0 - 1 - 2 with sepset {(0,2): {}} orients
    // 0 -> 1 <- 2 and no cycle is possible; cycles need the Meek stage.
    // Here we just pin the no-sepset error path instead.
    MixedGraph skel(3);
    skel.set_undirected(0, 1);
    skel.set_undirected(1, 2);
    SepsetMap seps;  // missing entry for the non-adjacent pair (0, 2)
    CHECK_THROWS_AS(autopc::orient_colliders(skel, seps), std::logic_error);
}

TEST_CASE("orientation rule: chain tail propagates to avoid a new collider") {
    // 0 -> 1 - 2 with 0, 2 non-adjacent must become 0 -> 1 -> 2.
    MixedGraph g(3);
    g.set_directed(0, 1);
    g.set_undirected(1, 2);
    const MixedGraph out = autopc::apply_meek_rules(g);
    CHECK(out.has_directed(1, 2));
}

TEST_CASE("orientation rule: directed two-step path forces the shortcut") {
    // 0 -> 1 -> 2 with 0 - 2 undirected must orient 0 -> 2.
    MixedGraph g(3);
    g.set_directed(0, 1);
    g.set_directed(1, 2);
    g.set_undirected(0, 2);
    const MixedGraph out = autopc::apply_meek_rules(g);
    CHECK(out.has_directed(0, 2));
}

TEST_CASE("orientation rule: two converging chains force the spoke") {
    // 0 - 1, 0 - 2, 0 - 3, 1 -> 2 and 3 -> 2 with 1, 3 non-adjacent: orient 0 -> 2.
    MixedGraph g(4);
    g.set_undirected(0, 1);
    g.set_undirected(0, 2);
    g.set_undirected(0, 3);
    g.set_directed(1, 2);
    g.set_directed(3, 2);
    const MixedGraph out = autopc::apply_meek_rules(g);
    CHECK(out.has_directed(0, 2));
    CHECK(out.has_undirected(0, 1));
    CHECK(out.has_undirected(0, 3));
}

TEST_CASE("shielded triples do not trigger chain propagation") {
    // 0 -> 1 - 2 with 0 - 2 adjacent (undirected): rule must not fire on the
    // shielded triple alone... but the two-step rule can still act once 1 -> 2
    // would exist; verify nothing is oriented here.
    MixedGraph g(3);
    g.set_directed(0, 1);
    g.set_undirected(1, 2);
    g.set_undirected(0, 2);
    const MixedGraph out = autopc::apply_meek_rules(g);
    CHECK(out.has_undirected(1, 2));
    CHECK(out.has_undirected(0, 2));
}

TEST_CASE("closure is idempotent and preserves acyclicity on random inputs") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 200; ++rep) {
        const MixedGraph in = oracles::random_pdag(7, 0.4, 0.5, rng);
        const MixedGraph once = autopc::apply_meek_rules(in);
        CHECK(once.is_pdag());
        CHECK(autopc::apply_meek_rules(once) == once);
        // Closure only adds orientations, never edges.
        CHECK(oracles::skeleton_of(once) == oracles::skeleton_of(in));
    }
}

TEST_CASE("cpdag closure is stable: dag_to_cpdag is idempotent through extension") {
    std::mt19937_64 rng(6);
    for (int rep = 0; rep < 100; ++rep) {
        const MixedGraph dag = oracles::random_dag(7, 0.4, rng);
        const MixedGraph cpdag = autopc::dag_to_cpdag(dag);
        CHECK(cpdag.is_pdag());
        const MixedGraph member = autopc::extend_to_dag(cpdag);
        CHECK(member.is_dag());
        CHECK(oracles::skeleton_of(member) == oracles::skeleton_of(dag));
        CHECK(autopc::dag_to_cpdag(member) == cpdag);
    }
}

TEST_CASE("extension keeps already-directed edges") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 100; ++rep) {
        const MixedGraph pdag = oracles::random_pdag(7, 0.4, 0.5, rng);
        const MixedGraph dag = autopc::extend_to_dag(pdag);
        CHECK(dag.is_dag());
        CHECK(oracles::skeleton_of(dag) == oracles::skeleton_of(pdag));
        for (const auto& e : pdag.edges())
            if (e.directed) CHECK(dag.has_directed(e.a, e.b));
    }
}

TEST_CASE("topological order puts parents before children") {
    std::mt19937_64 rng(8);
    for (int rep = 0; rep < 50; ++rep) {
        const MixedGraph dag = oracles::random_dag(8, 0.4, rng);
        const std::vector<int> order = autopc::topological_order(dag);
        std::vector<int> pos(8);
        for (int k = 0; k < 8; ++k) pos[static_cast<size_t>(order[static_cast<size_t>(k)])] = k;
        for (const auto& e : dag.edges()) CHECK(pos[static_cast<size_t>(e.a)] < pos[static_cast<size_t>(e.b)]);
    }

    MixedGraph cyc3(3);
    cyc3.set_directed(0, 1);
    cyc3.set_directed(1, 2);
    cyc3.set_directed(2, 0);
    CHECK_THROWS_AS(autopc::topological_order(cyc3), std::invalid_argument);
}

TEST_CASE("pdag parents include undirected neighbours") {
    MixedGraph g(4);
    g.set_directed(0, 2);
    g.set_undirected(1, 2);
    g.set_directed(2, 3);
    CHECK(autopc::parents_in_pdag(g, 2) == std::vector<int>{0, 1});
    CHECK(autopc::parents_in_pdag(g, 3) == std::vector<int>{2});
    CHECK(autopc::parents_in_pdag(g, 0).empty());
}
