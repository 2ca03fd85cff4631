#include "autopc/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace autopc {

namespace {

void require_same_size(const MixedGraph& a, const MixedGraph& b) {
    if (a.num_vertices() != b.num_vertices())
        throw std::invalid_argument("graphs have different vertex counts");
}

// State of the unordered pair {i, j} with i < j: 0 absent, 1 undirected,
// 2 directed i->j, 3 directed j->i.
int pair_state(const MixedGraph& g, int i, int j) {
    if (!g.has_edge(i, j)) return 0;
    if (g.has_undirected(i, j)) return 1;
    return g.has_directed(i, j) ? 2 : 3;
}

}  // namespace

int shd(const MixedGraph& a, const MixedGraph& b) {
    require_same_size(a, b);
    const int d = a.num_vertices();
    int dist = 0;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if (pair_state(a, i, j) != pair_state(b, i, j)) ++dist;
    return dist;
}

double normalized_shd(const MixedGraph& a, const MixedGraph& b) {
    require_same_size(a, b);
    const int d = a.num_vertices();
    const long long pairs = static_cast<long long>(d) * (d - 1) / 2;
    if (pairs == 0) return 1.0;
    return 1.0 - static_cast<double>(shd(a, b)) / static_cast<double>(pairs);
}

EdgeConfusion edge_confusion(const MixedGraph& estimate, const MixedGraph& reference) {
    require_same_size(estimate, reference);
    const int d = estimate.num_vertices();
    EdgeConfusion c;
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            const bool est = estimate.has_edge(i, j);
            const bool ref = reference.has_edge(i, j);
            if (est && ref)
                ++c.tp;
            else if (est && !ref)
                ++c.fp;
            else if (!est && ref)
                ++c.fn;
            else
                ++c.tn;
        }
    }
    return c;
}

double f1(const EdgeConfusion& c) {
    if (c.tp == 0 && c.fp == 0 && c.fn == 0) return 1.0;
    const double denom = static_cast<double>(2 * c.tp + c.fp + c.fn);
    return denom == 0.0 ? 0.0 : 2.0 * static_cast<double>(c.tp) / denom;
}

double mcc(const EdgeConfusion& c) {
    const double pp = static_cast<double>(c.tp + c.fp);
    const double pn = static_cast<double>(c.tp + c.fn);
    const double np = static_cast<double>(c.tn + c.fp);
    const double nn = static_cast<double>(c.tn + c.fn);
    if (pp == 0.0 || pn == 0.0 || np == 0.0 || nn == 0.0) return 0.0;
    const double num =
        static_cast<double>(c.tp) * static_cast<double>(c.tn) -
        static_cast<double>(c.fp) * static_cast<double>(c.fn);
    return num / std::sqrt(pp * pn * np * nn);
}

}  // namespace autopc
