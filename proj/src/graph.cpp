#include "gdr/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gdr {

Graph Graph::build(int vertex_count, const std::vector<std::pair<int, int>>& edge_pairs) {
    if (vertex_count < 0) throw std::invalid_argument("build_graph: negative vertex count");
    std::vector<std::pair<int, int>> canon;
    canon.reserve(edge_pairs.size());
    for (auto [u, v] : edge_pairs) {
        if (u == v)
            throw std::invalid_argument("build_graph: loop edge at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw std::invalid_argument("build_graph: edge endpoint out of range");
        canon.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

    Graph g;
    g.n_ = vertex_count;
    g.edges_ = std::move(canon);
    g.incident_.assign(vertex_count, {});
    for (int e = 0; e < g.edge_count(); ++e) {
        g.incident_[g.edges_[e].first].push_back(e);
        g.incident_[g.edges_[e].second].push_back(e);
    }
    return g;
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it != edges_.end() && *it == std::make_pair(u, v))
        return static_cast<int>(it - edges_.begin());
    return -1;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(incident_[v].size());
    for (int e : incident_[v]) {
        auto [a, b] = edges_[e];
        out.push_back(a == v ? b : a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int sign_on_pair(const Graph& g, const Orientation& sigma, int u, int v) {
    int e = g.edge_index(u, v);
    if (e < 0) throw std::invalid_argument("sign_on_pair: not an edge");
    return u < v ? sigma.sign[e] : -sigma.sign[e];
}

Subgraph::Subgraph(const Graph& parent, std::vector<char> vertex_mask, std::vector<char> edge_mask)
    : parent_(parent), vmask_(std::move(vertex_mask)), emask_(std::move(edge_mask)) {
    if (static_cast<int>(vmask_.size()) != parent_.vertex_count() ||
        static_cast<int>(emask_.size()) != parent_.edge_count())
        throw std::invalid_argument("Subgraph: mask sizes do not match parent");
    for (int e = 0; e < parent_.edge_count(); ++e) {
        if (!emask_[e]) continue;
        auto [u, v] = parent_.edge(e);
        if (!vmask_[u] || !vmask_[v])
            throw std::invalid_argument("Subgraph: edge without both endpoints");
    }
}

Subgraph Subgraph::empty(const Graph& parent) {
    return Subgraph(parent, std::vector<char>(parent.vertex_count(), 0),
                    std::vector<char>(parent.edge_count(), 0));
}

Subgraph Subgraph::full(const Graph& parent) {
    return Subgraph(parent, std::vector<char>(parent.vertex_count(), 1),
                    std::vector<char>(parent.edge_count(), 1));
}

Subgraph Subgraph::from_sets(const Graph& parent, const std::vector<int>& vertices,
                             const std::vector<int>& edge_indices) {
    std::vector<char> vm(parent.vertex_count(), 0), em(parent.edge_count(), 0);
    for (int v : vertices) vm.at(v) = 1;
    for (int e : edge_indices) em.at(e) = 1;
    return Subgraph(parent, std::move(vm), std::move(em));
}

Subgraph Subgraph::induced(const Graph& parent, const std::vector<int>& vertices) {
    std::vector<char> vm(parent.vertex_count(), 0), em(parent.edge_count(), 0);
    for (int v : vertices) vm.at(v) = 1;
    for (int e = 0; e < parent.edge_count(); ++e) {
        auto [u, v] = parent.edge(e);
        if (vm[u] && vm[v]) em[e] = 1;
    }
    return Subgraph(parent, std::move(vm), std::move(em));
}

Subgraph Subgraph::edge_closure(const Graph& parent, const std::vector<int>& edge_indices) {
    std::vector<char> vm(parent.vertex_count(), 0), em(parent.edge_count(), 0);
    for (int e : edge_indices) {
        em.at(e) = 1;
        vm[parent.edge(e).first] = 1;
        vm[parent.edge(e).second] = 1;
    }
    return Subgraph(parent, std::move(vm), std::move(em));
}

std::vector<int> Subgraph::vertex_list() const {
    std::vector<int> out;
    for (int v = 0; v < parent_.vertex_count(); ++v)
        if (vmask_[v]) out.push_back(v);
    return out;
}

std::vector<int> Subgraph::edge_list() const {
    std::vector<int> out;
    for (int e = 0; e < parent_.edge_count(); ++e)
        if (emask_[e]) out.push_back(e);
    return out;
}

int Subgraph::vertex_count() const {
    return static_cast<int>(std::count(vmask_.begin(), vmask_.end(), 1));
}

int Subgraph::edge_count() const {
    return static_cast<int>(std::count(emask_.begin(), emask_.end(), 1));
}

int Subgraph::degree_within(int v) const {
    int d = 0;
    for (int e : parent_.incident_edges(v))
        if (emask_[e]) ++d;
    return d;
}

namespace {
void require_same_parent(const Subgraph& a, const Subgraph& b) {
    if (!(a.parent() == b.parent()))
        throw std::invalid_argument("subgraph operation: mismatched parent graphs");
}
} // namespace

Subgraph subgraph_union(const Subgraph& a, const Subgraph& b) {
    require_same_parent(a, b);
    std::vector<char> vm(a.vertex_mask()), em(a.edge_mask());
    for (size_t i = 0; i < vm.size(); ++i) vm[i] = vm[i] || b.vertex_mask()[i];
    for (size_t i = 0; i < em.size(); ++i) em[i] = em[i] || b.edge_mask()[i];
    return Subgraph(a.parent(), std::move(vm), std::move(em));
}

Subgraph subgraph_intersection(const Subgraph& a, const Subgraph& b) {
    require_same_parent(a, b);
    std::vector<char> vm(a.vertex_mask()), em(a.edge_mask());
    for (size_t i = 0; i < vm.size(); ++i) vm[i] = vm[i] && b.vertex_mask()[i];
    for (size_t i = 0; i < em.size(); ++i) em[i] = em[i] && b.edge_mask()[i];
    return Subgraph(a.parent(), std::move(vm), std::move(em));
}

ComponentPartition connected_components(const Graph& g) {
    const int n = g.vertex_count();
    ComponentPartition p;
    p.label.assign(n, -1);
    for (int s = 0; s < n; ++s) {
        if (p.label[s] >= 0) continue;
        int id = p.count();
        p.representative.push_back(s);
        std::vector<int> stack{s};
        p.label[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (p.label[w] < 0) {
                    p.label[w] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    return p;
}

std::pair<int, int> betti_numbers(const Graph& g) {
    int b0 = connected_components(g).count();
    int b1 = g.edge_count() - g.vertex_count() + b0;
    return {b0, b1};
}

int min_valency(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("min_valency: empty graph");
    int m = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v) m = std::min(m, g.degree(v));
    return m;
}

bool is_forest(const Graph& g) { return betti_numbers(g).second == 0; }

MaterializedSubgraph materialize(const Subgraph& s, const Orientation& parent_sigma) {
    const Graph& p = s.parent();
    MaterializedSubgraph m;
    m.vertex_map.assign(p.vertex_count(), -1);
    for (int v = 0; v < p.vertex_count(); ++v) {
        if (!s.has_vertex(v)) continue;
        m.vertex_map[v] = static_cast<int>(m.parent_vertex.size());
        m.parent_vertex.push_back(v);
    }
    std::vector<std::pair<int, int>> edges;
    m.edge_map.assign(p.edge_count(), -1);
    for (int e = 0; e < p.edge_count(); ++e) {
        if (!s.has_edge_index(e)) continue;
        auto [u, v] = p.edge(e);
        edges.emplace_back(m.vertex_map[u], m.vertex_map[v]);
        m.parent_edge.push_back(e);
    }
    m.graph = Graph::build(static_cast<int>(m.parent_vertex.size()), edges);
    // The vertex relabeling is monotone, so the canonical edge order is
    // preserved and signs transfer index-by-index.
    m.sigma.sign.resize(m.parent_edge.size());
    for (size_t i = 0; i < m.parent_edge.size(); ++i) {
        m.edge_map[m.parent_edge[i]] = static_cast<int>(i);
        m.sigma.sign[i] = parent_sigma.sign.empty() ? 1 : parent_sigma.sign[m.parent_edge[i]];
    }
    return m;
}

MaterializedSubgraph materialize(const Subgraph& s) {
    return materialize(s, Orientation::all_plus(s.parent()));
}

} // namespace gdr
