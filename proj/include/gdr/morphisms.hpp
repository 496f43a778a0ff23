#pragma once

#include <vector>

#include "gdr/cochain.hpp"
#include "gdr/graph.hpp"
#include "gdr/matrix.hpp"

namespace gdr {

/// Adjacency-preserving vertex map between simple graphs. Validity is
/// checked eagerly at construction: every source edge must map to a target
/// edge, so in particular no edge may collapse to a loop. Owns copies of
/// both endpoint graphs.
class GraphHomomorphism {
public:
    GraphHomomorphism(Graph source, Graph target, std::vector<int> vertex_map);

    static GraphHomomorphism identity(const Graph& g);

    const Graph& source() const { return source_; }
    const Graph& target() const { return target_; }
    int operator()(int v) const { return map_[v]; }
    const std::vector<int>& vertex_map() const { return map_; }
    int mapped_edge_index(int e) const { return edge_image_[e]; }
    bool is_bijective_on_vertices() const;

private:
    Graph source_, target_;
    std::vector<int> map_;
    std::vector<int> edge_image_; // source edge -> target edge index
};

/// g after f (source of f, target of g).
GraphHomomorphism compose(const GraphHomomorphism& g, const GraphHomomorphism& f);

/// Formal sums of vertices (degree 0) or canonical edges (degree 1); the
/// identification (v_i,v_j) ~ -(v_j,v_i) is carried by canonical storage.
struct ChainVector {
    int degree = 0;
    RatVec coeffs;
};

ChainVector pushforward(const GraphHomomorphism& h, const ChainVector& c);

VertexForm pullback_vertex(const GraphHomomorphism& h, const VertexForm& f);

/// F*g(v,w) = g(Fv,Fw), re-expressed from the target's orientation-induced
/// basis into the source's.
EdgeForm pullback_edge(const GraphHomomorphism& h, const Orientation& source_sigma,
                       const Orientation& target_sigma, const EdgeForm& f);

/// Matrix of F* on Omega^degree (target coordinates to source coordinates).
RationalMatrix pullback_omega_matrix(const GraphHomomorphism& h, const Orientation& source_sigma,
                                     const Orientation& target_sigma, int degree);

/// Matrix of the induced map on cohomology in the harmonic bases. For
/// degree 1 the pullback of a harmonic form is orthogonally projected onto
/// ker(D*) of the source; when the homomorphism is an automorphism that
/// projection must be the identity and this is asserted.
RationalMatrix induced_cohomology_map(const GraphHomomorphism& h, const Orientation& source_sigma,
                                      const Orientation& target_sigma,
                                      const CohomologySpace& source_space,
                                      const CohomologySpace& target_space);
RationalMatrix induced_cohomology_map(const GraphHomomorphism& h, const Orientation& source_sigma,
                                      const Orientation& target_sigma, int degree);

bool is_graph_isomorphism(const GraphHomomorphism& h);

} // namespace gdr
