#pragma once

#include <utility>
#include <vector>

namespace gdr {

using VertexId = int;

/// Finite simple graph in canonical form: vertices are 0..n-1, edges are
/// stored once as (u,v) with u < v, sorted lexicographically. Immutable
/// after construction; all direction information lives in Orientation.
class Graph {
public:
    Graph() = default;

    /// Canonicalizing constructor: reversed duplicates collapse, loops and
    /// out-of-range endpoints are rejected.
    static Graph build(int vertex_count, const std::vector<std::pair<int, int>>& edge_pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(int e) const { return edges_[e]; }

    /// Index of edge {u,v} in the canonical list, or -1.
    int edge_index(int u, int v) const;
    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

    int degree(int v) const { return static_cast<int>(incident_[v].size()); }
    const std::vector<int>& incident_edges(int v) const { return incident_[v]; }
    std::vector<int> neighbors(int v) const; // ascending

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> incident_; // vertex -> incident edge indices, ascending
};

/// Edge directions: sign[e] is sigma(u,v) for the canonical pair u < v, so
/// sigma(v,u) = -sign[e] by convention rather than by storage.
struct Orientation {
    std::vector<int> sign; // entries +1 / -1, parallel to Graph::edges()

    static Orientation all_plus(const Graph& g) {
        return Orientation{std::vector<int>(g.edge_count(), 1)};
    }
    Orientation reversed() const {
        Orientation r = *this;
        for (int& s : r.sign) s = -s;
        return r;
    }
};

/// sigma(u,v) for an arbitrary ordered adjacent pair.
int sign_on_pair(const Graph& g, const Orientation& sigma, int u, int v);

/// Subgraph of a fixed parent, not necessarily induced: it may contain both
/// endpoints of a parent edge without the edge. Owns a copy of the parent
/// (graphs are immutable values); parent agreement is structural.
class Subgraph {
public:
    Subgraph(const Graph& parent, std::vector<char> vertex_mask, std::vector<char> edge_mask);

    static Subgraph empty(const Graph& parent);
    static Subgraph full(const Graph& parent);
    static Subgraph from_sets(const Graph& parent, const std::vector<int>& vertices,
                              const std::vector<int>& edge_indices);
    /// Induced subgraph: the given vertices plus every parent edge joining two of them.
    static Subgraph induced(const Graph& parent, const std::vector<int>& vertices);
    /// The given edges plus their endpoints.
    static Subgraph edge_closure(const Graph& parent, const std::vector<int>& edge_indices);

    const Graph& parent() const { return parent_; }
    bool has_vertex(int v) const { return vmask_[v] != 0; }
    bool has_edge_index(int e) const { return emask_[e] != 0; }
    const std::vector<char>& vertex_mask() const { return vmask_; }
    const std::vector<char>& edge_mask() const { return emask_; }
    std::vector<int> vertex_list() const;
    std::vector<int> edge_list() const;
    int vertex_count() const;
    int edge_count() const;
    int degree_within(int v) const;
    bool is_empty() const { return vertex_count() == 0; }

    friend bool operator==(const Subgraph& a, const Subgraph& b) {
        return a.parent_ == b.parent_ && a.vmask_ == b.vmask_ && a.emask_ == b.emask_;
    }

private:
    Graph parent_;
    std::vector<char> vmask_, emask_;
};

Subgraph subgraph_union(const Subgraph& a, const Subgraph& b);
Subgraph subgraph_intersection(const Subgraph& a, const Subgraph& b);

struct ComponentPartition {
    std::vector<int> label;          // label[v] = component id
    std::vector<int> representative; // representative[id] = smallest vertex
    int count() const { return static_cast<int>(representative.size()); }
};

/// Components labeled in order of their smallest vertex.
ComponentPartition connected_components(const Graph& g);

/// (b0, b1) = (component count, |E| - |V| + b0).
std::pair<int, int> betti_numbers(const Graph& g);

int min_valency(const Graph& g);

bool is_forest(const Graph& g);

/// A subgraph re-indexed as a standalone graph (dense labels preserve the
/// parent's vertex order, so canonical edge pairs and their signs carry over
/// unchanged).
struct MaterializedSubgraph {
    Graph graph;
    Orientation sigma;
    std::vector<int> parent_vertex; // new -> parent
    std::vector<int> vertex_map;    // parent -> new, -1 if absent
    std::vector<int> parent_edge;   // new edge -> parent edge
    std::vector<int> edge_map;      // parent edge -> new edge, -1 if absent
};

MaterializedSubgraph materialize(const Subgraph& s, const Orientation& parent_sigma);
MaterializedSubgraph materialize(const Subgraph& s);

} // namespace gdr
