#include "autopc/graph_algorithms.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

namespace autopc {

namespace {

// Directs tail -> head unless that closes a fully directed cycle; on refusal
// the previous state of the pair is restored. Returns whether the edge state
// actually changed.
bool direct_unless_cycle(MixedGraph& g, int tail, int head) {
    if (g.has_directed(tail, head)) return false;
    const bool was_undirected = g.has_undirected(tail, head);
    const bool was_reversed = g.has_directed(head, tail);
    g.set_directed(tail, head);
    if (g.has_directed_cycle()) {
        if (was_undirected) g.set_undirected(tail, head);
        else if (was_reversed) g.set_directed(head, tail);
        else g.remove_edge(tail, head);
        return false;
    }
    return true;
}

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

bool d_separated(const MixedGraph& dag, int i, int j, const std::vector<int>& w) {
    const int d = dag.num_vertices();
    if (!dag.is_dag()) throw std::invalid_argument("d_separated: graph is not a DAG");
    if (i < 0 || i >= d || j < 0 || j >= d)
        throw std::invalid_argument("d_separated: vertex index out of range");
    if (i == j) throw std::invalid_argument("d_separated: endpoints must differ");

    std::vector<char> in_w(d, 0);
    for (int v : w) {
        if (v < 0 || v >= d) throw std::invalid_argument("d_separated: conditioning vertex out of range");
        if (v == i || v == j)
            throw std::invalid_argument("d_separated: conditioning set contains an endpoint");
        in_w[v] = 1;
    }

    // Phase 1: mark w and every ancestor of w. A collider is passable exactly
    // when it carries this mark.
    std::vector<char> anc(d, 0);
    std::deque<int> work(w.begin(), w.end());
    for (int v : w) anc[v] = 1;
    while (!work.empty()) {
        const int v = work.front();
        work.pop_front();
        for (int p : dag.parents(v))
            if (!anc[p]) {
                anc[p] = 1;
                work.push_back(p);
            }
    }

    // Phase 2: BFS over (vertex, entry direction) states. Entering "down"
    // means the last edge pointed into the vertex; entering "up" covers both
    // the start vertex and moves toward parents.
    enum { kUp = 0, kDown = 1 };
    std::vector<char> seen(static_cast<std::size_t>(d) * 2, 0);
    std::deque<std::pair<int, int>> queue;
    bool connected = false;
    auto push = [&](int v, int dir) {
        if (v == j) {
            connected = true;
            return;
        }
        if (!seen[static_cast<std::size_t>(v) * 2 + dir]) {
            seen[static_cast<std::size_t>(v) * 2 + dir] = 1;
            queue.emplace_back(v, dir);
        }
    };
    push(i, kUp);
    while (!queue.empty() && !connected) {
        const auto [v, dir] = queue.front();
        queue.pop_front();
        if (dir == kUp) {
            if (in_w[v]) continue;
            for (int p : dag.parents(v)) push(p, kUp);
            for (int c : dag.children(v)) push(c, kDown);
        } else {
            if (!in_w[v])
                for (int c : dag.children(v)) push(c, kDown);
            if (anc[v])
                for (int p : dag.parents(v)) push(p, kUp);
        }
        if (connected) break;
    }
    return !connected;
}

MixedGraph dag_to_cpdag(const MixedGraph& dag) {
    if (!dag.is_dag()) throw std::invalid_argument("dag_to_cpdag: input is not a DAG");
    const int d = dag.num_vertices();
    MixedGraph pattern(d);
    for (const auto& e : dag.edges()) pattern.set_undirected(e.a, e.b);
    for (int k = 0; k < d; ++k) {
        const std::vector<int> pa = dag.parents(k);
        for (std::size_t x = 0; x < pa.size(); ++x)
            for (std::size_t y = x + 1; y < pa.size(); ++y)
                if (!dag.has_edge(pa[x], pa[y])) {
                    pattern.set_directed(pa[x], k);
                    pattern.set_directed(pa[y], k);
                }
    }
    return apply_meek_rules(pattern);
}

MixedGraph orient_colliders(const MixedGraph& skeleton, const SepsetMap& sepsets) {
    if (skeleton.num_directed_edges() > 0)
        throw std::invalid_argument("orient_colliders: skeleton must be fully undirected");
    const int d = skeleton.num_vertices();
    MixedGraph g = skeleton;
    for (int i = 0; i < d; ++i) {
        const std::vector<int> adj_i = skeleton.adjacent(i);
        for (int j = i + 1; j < d; ++j) {
            if (skeleton.has_edge(i, j)) continue;
            const std::vector<int> common = sorted_intersection(adj_i, skeleton.adjacent(j));
            if (common.empty()) continue;
            if (!sepsets.contains(i, j))
                throw std::logic_error("orient_colliders: missing sepset for pair {" +
                                       std::to_string(i) + "," + std::to_string(j) + "}");
            const std::vector<int>& w = sepsets.at(i, j);
            for (int k : common) {
                if (std::binary_search(w.begin(), w.end(), k)) continue;
                direct_unless_cycle(g, i, k);
                direct_unless_cycle(g, j, k);
            }
        }
    }
    return g;
}

MixedGraph apply_meek_rules(const MixedGraph& pdag) {
    if (pdag.has_directed_cycle())
        throw std::invalid_argument("apply_meek_rules: input has a directed cycle");
    const int d = pdag.num_vertices();
    MixedGraph g = pdag;
    bool changed = true;
    while (changed) {
        changed = false;
        // R1: a -> b, b - c, a and c non-adjacent  =>  b -> c
        for (int b = 0; b < d; ++b)
            for (int a : g.parents(b))
                for (int c : g.undirected_neighbors(b)) {
                    if (c == a || g.has_edge(a, c)) continue;
                    if (!g.has_undirected(b, c)) continue;  // directed earlier in this pass
                    changed |= direct_unless_cycle(g, b, c);
                }
        // R2: a -> b -> c, a - c  =>  a -> c
        for (int a = 0; a < d; ++a)
            for (int c : g.undirected_neighbors(a)) {
                if (!g.has_undirected(a, c)) continue;
                for (int b : g.children(a))
                    if (b != c && g.has_directed(b, c)) {
                        changed |= direct_unless_cycle(g, a, c);
                        break;
                    }
            }
        // R3: a - b, a - c, a - d, c -> b, d -> b, c and d non-adjacent  =>  a -> b
        for (int a = 0; a < d; ++a) {
            const std::vector<int> nbrs = g.undirected_neighbors(a);
            for (int b : nbrs) {
                if (!g.has_undirected(a, b)) continue;
                bool fired = false;
                for (std::size_t x = 0; x < nbrs.size() && !fired; ++x)
                    for (std::size_t y = x + 1; y < nbrs.size() && !fired; ++y) {
                        const int c = nbrs[x];
                        const int k = nbrs[y];
                        if (c == b || k == b) continue;
                        if (!g.has_undirected(a, c) || !g.has_undirected(a, k)) continue;
                        if (g.has_directed(c, b) && g.has_directed(k, b) && !g.has_edge(c, k))
                            fired = direct_unless_cycle(g, a, b);
                    }
                changed |= fired;
            }
        }
    }
    return g;
}

std::vector<int> parents_in_pdag(const MixedGraph& pdag, int v) {
    std::vector<int> out = pdag.parents(v);
    const std::vector<int> und = pdag.undirected_neighbors(v);
    out.insert(out.end(), und.begin(), und.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> topological_order(const MixedGraph& g) {
    const int d = g.num_vertices();
    std::vector<int> indeg(d, 0);
    for (int v = 0; v < d; ++v) indeg[v] = static_cast<int>(g.parents(v).size());
    std::vector<int> order;
    order.reserve(d);
    std::vector<char> placed(d, 0);
    for (int step = 0; step < d; ++step) {
        int pick = -1;
        for (int v = 0; v < d; ++v)
            if (!placed[v] && indeg[v] == 0) {
                pick = v;
                break;
            }
        if (pick < 0) throw std::invalid_argument("topological_order: directed cycle");
        placed[pick] = 1;
        order.push_back(pick);
        for (int c : g.children(pick)) --indeg[c];
    }
    return order;
}

MixedGraph extend_to_dag(const MixedGraph& pdag) {
    if (pdag.has_directed_cycle())
        throw std::invalid_argument("extend_to_dag: input has a directed cycle");
    const int d = pdag.num_vertices();
    MixedGraph result = pdag;
    std::vector<char> active(d, 1);
    int remaining = d;

    auto adjacent_active = [&](int v) {
        std::vector<int> out;
        for (int u : result.adjacent(v))
            if (active[u]) out.push_back(u);
        return out;
    };

    while (remaining > 0) {
        int picked = -1;
        for (int v = 0; v < d && picked < 0; ++v) {
            if (!active[v]) continue;
            bool sink = true;
            for (int c : result.children(v))
                if (active[c]) {
                    sink = false;
                    break;
                }
            if (!sink) continue;
            const std::vector<int> adj = adjacent_active(v);
            bool ok = true;
            for (int u : adj) {
                if (!result.has_undirected(u, v)) continue;
                for (int a : adj)
                    if (a != u && !result.has_edge(u, a)) {
                        ok = false;
                        break;
                    }
                if (!ok) break;
            }
            if (ok) picked = v;
        }
        if (picked < 0) {
            // Blocked: orient what is left along a topological order of the
            // directed part. Acyclic, but new colliders are possible.
            const std::vector<int> order = topological_order(result);
            std::vector<int> pos(d, 0);
            for (int idx = 0; idx < d; ++idx) pos[order[idx]] = idx;
            for (const auto& e : result.edges())
                if (!e.directed) {
                    if (pos[e.a] < pos[e.b]) result.set_directed(e.a, e.b);
                    else result.set_directed(e.b, e.a);
                }
            return result;
        }
        for (int u : result.undirected_neighbors(picked))
            if (active[u]) result.set_directed(u, picked);
        active[picked] = 0;
        --remaining;
    }
    return result;
}

}  // namespace autopc
