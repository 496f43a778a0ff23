#pragma once

#include <vector>

#include "gdr/graph.hpp"
#include "gdr/matrix.hpp"

namespace gdr {

/// Element of Omega^0: one value per vertex.
struct VertexForm {
    RatVec values;
};

/// Element of Omega^1 in the orientation-induced basis: values[e] is the
/// form evaluated along the sigma-positive traversal of edge e. Reversing
/// the orientation of an edge negates its coordinate.
struct EdgeForm {
    RatVec values;
};

/// f(u,v) for an adjacent ordered pair, antisymmetry included.
Rational edge_form_value(const Graph& g, const Orientation& sigma, const EdgeForm& f, int u, int v);

/// Df(u,v) = f(v) - f(u), returned in the orientation-induced basis.
EdgeForm coboundary(const Graph& g, const Orientation& sigma, const VertexForm& f);

/// |V| x |E| matrix with -1 at each edge's tail and +1 at its head; this is
/// the matrix of D* (the adjoint of D), and its transpose is D.
RationalMatrix incidence_matrix(const Graph& g, const Orientation& sigma);
RationalMatrix coboundary_matrix(const Graph& g, const Orientation& sigma);

/// (Delta+ , Delta-) = (D*D on vertex forms, DD* on edge forms).
std::pair<RationalMatrix, RationalMatrix> laplacians(const Graph& g, const Orientation& sigma);

/// Harmonic-representative model of H^p. Degree 0: component indicator
/// forms. Degree 1: fundamental-cycle forms in ker(D*) from a deterministic
/// BFS spanning forest; basis element i has coordinate +1 at its non-tree
/// edge and is supported on a single cycle.
struct CohomologySpace {
    int degree = 0;
    std::vector<VertexForm> vertex_basis;          // degree 0
    std::vector<EdgeForm> edge_basis;              // degree 1
    std::vector<Subgraph> supports;                // degree 1: cycle subgraphs
    std::vector<std::vector<int>> support_cycles;  // degree 1: cyclic vertex order
    std::vector<int> fundamental_edges;            // degree 1: non-tree edge per basis element
    int dimension() const {
        return degree == 0 ? static_cast<int>(vertex_basis.size())
                           : static_cast<int>(edge_basis.size());
    }
};

CohomologySpace cohomology(const Graph& g, const Orientation& sigma, int degree);

/// Coordinates of w in the fundamental-cycle basis; exact and valid only for
/// w in ker(D*), where they are read off at the non-tree edges.
RatVec harmonic_coordinates(const CohomologySpace& h1, const EdgeForm& w);

bool in_cycle_space(const Graph& g, const Orientation& sigma, const EdgeForm& w);

/// Support of a vertex form: induced subgraph on its nonzero vertices.
Subgraph support_subgraph(const Graph& g, const VertexForm& f);
/// Support of an edge form: its nonzero edges plus their endpoints.
Subgraph support_subgraph(const Graph& g, const EdgeForm& f);

} // namespace gdr
