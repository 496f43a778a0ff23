#pragma once

#include "gdr/cochain.hpp"
#include "gdr/graph.hpp"

namespace gdr {

/// Net degree of v within G under sigma: the sum of sigma(w,v) over G-edges
/// at v. Zero when v is not in G. Integrals over subgraphs always use net
/// degree relative to the subgraph.
int net_degree(const Subgraph& G, const Orientation& sigma, int v);

/// Vertex integral: sum over G's vertices of f(v) * n_G(v).
Rational vertex_integral(const Subgraph& G, const Orientation& sigma, const VertexForm& f);

/// Edge integral: sum over G's edges of f(u,v) * sigma(u,v), evaluated
/// literally on value pairs (convention-safe; in sigma-coordinates this is
/// the plain coordinate sum).
Rational edge_integral(const Subgraph& G, const Orientation& sigma, const EdgeForm& f);

struct StokesCertificate {
    Rational vertex_side;
    Rational edge_side;
    bool equal = false;
};

/// Discrete Stokes: integral of f over G equals the integral of Df over G.
StokesCertificate stokes_check(const Subgraph& G, const Orientation& sigma, const VertexForm& f);

struct AdditivityCertificate {
    Rational lhs; // integral over G1 + integral over G2
    Rational rhs; // integral over union + integral over intersection
    bool equal = false;
};

AdditivityCertificate integral_additivity_check(const Subgraph& g1, const Subgraph& g2,
                                                const Orientation& sigma, const VertexForm& f);
AdditivityCertificate integral_additivity_check(const Subgraph& g1, const Subgraph& g2,
                                                const Orientation& sigma, const EdgeForm& f);

struct HodgeCertificate {
    int vertex_kernel_dim = 0, vertex_image_dim = 0;
    int edge_kernel_dim = 0, edge_image_dim = 0;
    bool vertex_dims_ok = false;  // dims sum to |V|
    bool edge_dims_ok = false;    // dims sum to |E|
    bool vertex_orthogonal = false;
    bool edge_orthogonal = false;
    bool kernel_match_deg0 = false; // ker(D) = ker(Delta+)
    bool kernel_match_deg1 = false; // ker(D*) = ker(Delta-)
    bool ok() const {
        return vertex_dims_ok && edge_dims_ok && vertex_orthogonal && edge_orthogonal &&
               kernel_match_deg0 && kernel_match_deg1;
    }
};

/// Omega^0 = ker(Delta+) ⊕ Im(I) and Omega^1 = ker(Delta-) ⊕ Im(D), with
/// exact orthogonality of the summands and the kernel identifications.
HodgeCertificate hodge_decomposition(const Graph& g, const Orientation& sigma);

} // namespace gdr
