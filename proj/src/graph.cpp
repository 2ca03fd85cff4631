#include "autopc/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace autopc {

MixedGraph::MixedGraph(int num_vertices) : d_(num_vertices) {
    if (num_vertices < 0) throw std::invalid_argument("MixedGraph: num_vertices must be non-negative");
    state_.assign(num_vertices == 0 ? 0 : static_cast<std::size_t>(d_) * (d_ - 1) / 2,
                  EdgeState::Absent);
}

MixedGraph MixedGraph::complete_undirected(int num_vertices) {
    MixedGraph g(num_vertices);
    std::fill(g.state_.begin(), g.state_.end(), EdgeState::Undirected);
    return g;
}

void MixedGraph::check_vertex(int v) const {
    if (v < 0 || v >= d_)
        throw std::invalid_argument("MixedGraph: vertex index " + std::to_string(v) + " out of range");
}

void MixedGraph::check_pair(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    if (i == j) throw std::invalid_argument("MixedGraph: self loop on vertex " + std::to_string(i));
}

int MixedGraph::pair_index(int i, int j) const {
    const int lo = std::min(i, j);
    const int hi = std::max(i, j);
    return lo * d_ - lo * (lo + 1) / 2 + (hi - lo - 1);
}

bool MixedGraph::has_edge(int i, int j) const {
    check_pair(i, j);
    return state_[pair_index(i, j)] != EdgeState::Absent;
}

bool MixedGraph::has_undirected(int i, int j) const {
    check_pair(i, j);
    return state_[pair_index(i, j)] == EdgeState::Undirected;
}

bool MixedGraph::has_directed(int tail, int head) const {
    check_pair(tail, head);
    const EdgeState s = state_[pair_index(tail, head)];
    return tail < head ? s == EdgeState::DirectedLoHi : s == EdgeState::DirectedHiLo;
}

void MixedGraph::set_undirected(int i, int j) {
    check_pair(i, j);
    state_[pair_index(i, j)] = EdgeState::Undirected;
}

void MixedGraph::set_directed(int tail, int head) {
    check_pair(tail, head);
    state_[pair_index(tail, head)] =
            tail < head ? EdgeState::DirectedLoHi : EdgeState::DirectedHiLo;
}

void MixedGraph::remove_edge(int i, int j) {
    check_pair(i, j);
    state_[pair_index(i, j)] = EdgeState::Absent;
}

std::vector<int> MixedGraph::adjacent(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int u = 0; u < d_; ++u)
        if (u != v && state_[pair_index(v, u)] != EdgeState::Absent) out.push_back(u);
    return out;
}

std::vector<int> MixedGraph::parents(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int u = 0; u < d_; ++u)
        if (u != v && has_directed(u, v)) out.push_back(u);
    return out;
}

std::vector<int> MixedGraph::children(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int u = 0; u < d_; ++u)
        if (u != v && has_directed(v, u)) out.push_back(u);
    return out;
}

std::vector<int> MixedGraph::undirected_neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int u = 0; u < d_; ++u)
        if (u != v && state_[pair_index(v, u)] == EdgeState::Undirected) out.push_back(u);
    return out;
}

int MixedGraph::degree(int v) const {
    check_vertex(v);
    int deg = 0;
    for (int u = 0; u < d_; ++u)
        if (u != v && state_[pair_index(v, u)] != EdgeState::Absent) ++deg;
    return deg;
}

int MixedGraph::num_edges() const {
    int c = 0;
    for (EdgeState s : state_)
        if (s != EdgeState::Absent) ++c;
    return c;
}

int MixedGraph::num_directed_edges() const {
    int c = 0;
    for (EdgeState s : state_)
        if (s == EdgeState::DirectedLoHi || s == EdgeState::DirectedHiLo) ++c;
    return c;
}

int MixedGraph::num_undirected_edges() const {
    int c = 0;
    for (EdgeState s : state_)
        if (s == EdgeState::Undirected) ++c;
    return c;
}

bool MixedGraph::has_directed_cycle() const {
    // Kahn's algorithm over directed edges only.
    std::vector<int> indeg(d_, 0);
    for (int i = 0; i < d_; ++i)
        for (int j = i + 1; j < d_; ++j) {
            const EdgeState s = state_[pair_index(i, j)];
            if (s == EdgeState::DirectedLoHi) ++indeg[j];
            else if (s == EdgeState::DirectedHiLo) ++indeg[i];
        }
    std::queue<int> ready;
    for (int v = 0; v < d_; ++v)
        if (indeg[v] == 0) ready.push(v);
    int removed = 0;
    while (!ready.empty()) {
        const int v = ready.front();
        ready.pop();
        ++removed;
        for (int u = 0; u < d_; ++u)
            if (u != v && has_directed(v, u) && --indeg[u] == 0) ready.push(u);
    }
    return removed != d_;
}

bool MixedGraph::is_dag() const {
    if (num_undirected_edges() > 0) return false;
    return !has_directed_cycle();
}

std::vector<MixedGraph::Edge> MixedGraph::edges() const {
    std::vector<Edge> out;
    for (int i = 0; i < d_; ++i)
        for (int j = i + 1; j < d_; ++j) {
            switch (state_[pair_index(i, j)]) {
                case EdgeState::Absent: break;
                case EdgeState::Undirected: out.push_back({i, j, false}); break;
                case EdgeState::DirectedLoHi: out.push_back({i, j, true}); break;
                case EdgeState::DirectedHiLo: out.push_back({j, i, true}); break;
            }
        }
    return out;
}

bool SepsetMap::contains(int i, int j) const {
    return entries_.count({std::min(i, j), std::max(i, j)}) > 0;
}

const std::vector<int>& SepsetMap::at(int i, int j) const {
    return entries_.at({std::min(i, j), std::max(i, j)});
}

void SepsetMap::set(int i, int j, std::vector<int> w) {
    if (i == j) throw std::invalid_argument("SepsetMap: pair endpoints must differ");
    for (int v : w)
        if (v == i || v == j)
            throw std::invalid_argument("SepsetMap: separating set contains an endpoint");
    std::sort(w.begin(), w.end());
    entries_[{std::min(i, j), std::max(i, j)}] = std::move(w);
}

}  // namespace autopc
