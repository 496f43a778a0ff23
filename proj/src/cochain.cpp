#include "gdr/cochain.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace gdr {

Rational edge_form_value(const Graph& g, const Orientation& sigma, const EdgeForm& f, int u, int v) {
    int e = g.edge_index(u, v);
    if (e < 0) throw std::invalid_argument("edge_form_value: not an edge");
    return Rational(sign_on_pair(g, sigma, u, v)) * f.values[e];
}

EdgeForm coboundary(const Graph& g, const Orientation& sigma, const VertexForm& f) {
    if (static_cast<int>(f.values.size()) != g.vertex_count())
        throw std::invalid_argument("coboundary: form length does not match vertex count");
    EdgeForm df;
    df.values.resize(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        df.values[e] = Rational(sigma.sign[e]) * (f.values[v] - f.values[u]);
    }
    return df;
}

RationalMatrix incidence_matrix(const Graph& g, const Orientation& sigma) {
    RationalMatrix m(g.vertex_count(), g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        m(u, e) = -sigma.sign[e];
        m(v, e) = sigma.sign[e];
    }
    return m;
}

RationalMatrix coboundary_matrix(const Graph& g, const Orientation& sigma) {
    return incidence_matrix(g, sigma).transposed();
}

std::pair<RationalMatrix, RationalMatrix> laplacians(const Graph& g, const Orientation& sigma) {
    RationalMatrix inc = incidence_matrix(g, sigma);
    RationalMatrix d = inc.transposed();
    return {inc * d, d * inc};
}

namespace {

struct SpanningForest {
    std::vector<int> parent;      // BFS parent vertex, -1 at roots
    std::vector<int> parent_edge; // edge to parent, -1 at roots
    std::vector<char> tree_edge;  // per edge
};

// Breadth-first forest, lowest-index root per component, neighbors visited
// in ascending index — the deterministic basis the whole artifact fixes.
SpanningForest bfs_forest(const Graph& g) {
    SpanningForest f;
    f.parent.assign(g.vertex_count(), -2);
    f.parent_edge.assign(g.vertex_count(), -1);
    f.tree_edge.assign(g.edge_count(), 0);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (f.parent[s] != -2) continue;
        f.parent[s] = -1;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                if (f.parent[w] != -2) continue;
                f.parent[w] = v;
                f.parent_edge[w] = g.edge_index(v, w);
                f.tree_edge[f.parent_edge[w]] = 1;
                queue.push_back(w);
            }
        }
    }
    return f;
}

std::vector<int> path_to_root(const SpanningForest& f, int v) {
    std::vector<int> path{v};
    while (f.parent[path.back()] >= 0) path.push_back(f.parent[path.back()]);
    return path;
}

} // namespace

CohomologySpace cohomology(const Graph& g, const Orientation& sigma, int degree) {
    if (degree != 0 && degree != 1) throw std::invalid_argument("cohomology: degree must be 0 or 1");
    CohomologySpace h;
    h.degree = degree;

    if (degree == 0) {
        ComponentPartition comps = connected_components(g);
        for (int c = 0; c < comps.count(); ++c) {
            VertexForm ind;
            ind.values.assign(g.vertex_count(), Rational(0));
            for (int v = 0; v < g.vertex_count(); ++v)
                if (comps.label[v] == c) ind.values[v] = 1;
            h.vertex_basis.push_back(std::move(ind));
        }
        return h;
    }

    SpanningForest forest = bfs_forest(g);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (forest.tree_edge[e]) continue;
        auto [u, v] = g.edge(e);

        // Fundamental cycle: tree paths from u and v to their lowest common
        // ancestor, closed by the non-tree edge e.
        std::vector<int> pu = path_to_root(forest, u);
        std::vector<int> pv = path_to_root(forest, v);
        std::reverse(pu.begin(), pu.end());
        std::reverse(pv.begin(), pv.end());
        size_t common = 0;
        while (common + 1 < pu.size() && common + 1 < pv.size() && pu[common + 1] == pv[common + 1])
            ++common;
        // Cycle vertex order: u .. lca .. v, then back across e.
        std::vector<int> cycle;
        for (size_t i = pu.size(); i-- > common;) cycle.push_back(pu[i]);
        for (size_t i = common + 1; i < pv.size(); ++i) cycle.push_back(pv[i]);

        // Traverse the cycle so that e = (u,v) is crossed in its
        // sigma-positive direction, making the coordinate at e equal +1.
        bool positive_is_uv = (sigma.sign[e] == 1);
        // cycle currently runs u -> ... -> v; closing step is v -> u, i.e.
        // the pair (v,u). Reverse if sigma points u -> v.
        if (positive_is_uv) std::reverse(cycle.begin(), cycle.end());

        EdgeForm f;
        f.values.assign(g.edge_count(), Rational(0));
        std::vector<int> edge_ids;
        const int k = static_cast<int>(cycle.size());
        for (int i = 0; i < k; ++i) {
            int a = cycle[i], b = cycle[(i + 1) % k];
            int ei = g.edge_index(a, b);
            edge_ids.push_back(ei);
            // Coordinate such that f(a,b) = +1 along the traversal.
            f.values[ei] = sign_on_pair(g, sigma, a, b);
        }

        h.edge_basis.push_back(f);
        h.supports.push_back(Subgraph::edge_closure(g, edge_ids));
        h.support_cycles.push_back(std::move(cycle));
        h.fundamental_edges.push_back(e);
    }

    auto [b0, b1] = betti_numbers(g);
    (void)b0;
    if (static_cast<int>(h.edge_basis.size()) != b1)
        throw std::logic_error("cohomology: fundamental cycle count disagrees with b1");
    for (const EdgeForm& f : h.edge_basis)
        if (!in_cycle_space(g, sigma, f))
            throw std::logic_error("cohomology: fundamental cycle form not in ker(D*)");
    return h;
}

RatVec harmonic_coordinates(const CohomologySpace& h1, const EdgeForm& w) {
    if (h1.degree != 1) throw std::invalid_argument("harmonic_coordinates: degree-1 space required");
    RatVec c(h1.fundamental_edges.size());
    for (size_t i = 0; i < h1.fundamental_edges.size(); ++i)
        c[i] = w.values[h1.fundamental_edges[i]];
    return c;
}

bool in_cycle_space(const Graph& g, const Orientation& sigma, const EdgeForm& w) {
    return gdr::is_zero(incidence_matrix(g, sigma) * w.values);
}

Subgraph support_subgraph(const Graph& g, const VertexForm& f) {
    std::vector<int> vs;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (sgn(f.values[v]) != 0) vs.push_back(v);
    return Subgraph::induced(g, vs);
}

Subgraph support_subgraph(const Graph& g, const EdgeForm& f) {
    std::vector<int> es;
    for (int e = 0; e < g.edge_count(); ++e)
        if (sgn(f.values[e]) != 0) es.push_back(e);
    return Subgraph::edge_closure(g, es);
}

} // namespace gdr
