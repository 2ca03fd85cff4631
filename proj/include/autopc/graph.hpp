#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace autopc {

/// State of the edge between an unordered vertex pair {lo, hi} with lo < hi.
enum class EdgeState : std::uint8_t {
    Absent,
    Undirected,
    DirectedLoHi,  // lo -> hi
    DirectedHiLo,  // hi -> lo
};

/// Graph over d vertices where each unordered pair carries exactly one state:
/// absent, undirected, or directed one way. Covers DAGs, PDAGs and CPDAGs.
///
/// Value type. Algorithm functions take graphs by const reference and return
/// new ones, so a const MixedGraph can be shared across threads.
class MixedGraph {
public:
    explicit MixedGraph(int num_vertices);

    static MixedGraph complete_undirected(int num_vertices);

    int num_vertices() const { return d_; }

    bool has_edge(int i, int j) const;
    bool has_undirected(int i, int j) const;
    bool has_directed(int tail, int head) const;

    void set_undirected(int i, int j);
    void set_directed(int tail, int head);
    void remove_edge(int i, int j);

    /// Vertices adjacent to v by any edge, ascending.
    std::vector<int> adjacent(int v) const;
    /// Vertices with a directed edge into v, ascending.
    std::vector<int> parents(int v) const;
    /// Vertices v points to, ascending.
    std::vector<int> children(int v) const;
    /// Vertices sharing an undirected edge with v, ascending.
    std::vector<int> undirected_neighbors(int v) const;

    int degree(int v) const;
    int num_edges() const;
    int num_directed_edges() const;
    int num_undirected_edges() const;

    /// True when every edge is directed and no directed cycle exists.
    bool is_dag() const;
    /// Cycle check over directed edges only; undirected edges are ignored.
    bool has_directed_cycle() const;
    /// PDAG invariant: no cycle among the directed edges.
    bool is_pdag() const { return !has_directed_cycle(); }

    struct Edge {
        int a;
        int b;
        bool directed;  // directed: a -> b; undirected: a < b
        bool operator==(const Edge&) const = default;
    };
    /// All edges, ordered by (min(a,b), max(a,b)) ascending.
    std::vector<Edge> edges() const;

    bool operator==(const MixedGraph& other) const = default;

private:
    int pair_index(int i, int j) const;
    void check_vertex(int v) const;
    void check_pair(int i, int j) const;

    int d_ = 0;
    std::vector<EdgeState> state_;  // upper triangle, row-major
};

/// Conditioning sets that separated vertex pairs during skeleton discovery.
/// Keys are unordered pairs; sets are stored sorted and never contain the
/// endpoints.
class SepsetMap {
public:
    bool contains(int i, int j) const;
    const std::vector<int>& at(int i, int j) const;
    void set(int i, int j, std::vector<int> w);
    std::size_t size() const { return entries_.size(); }

    const std::map<std::pair<int, int>, std::vector<int>>& entries() const { return entries_; }

    bool operator==(const SepsetMap& other) const = default;

private:
    std::map<std::pair<int, int>, std::vector<int>> entries_;
};

}  // namespace autopc
