#include "gdr/calculus.hpp"

#include <stdexcept>

namespace gdr {

int net_degree(const Subgraph& G, const Orientation& sigma, int v) {
    if (v < 0 || v >= G.parent().vertex_count())
        throw std::invalid_argument("net_degree: vertex out of range");
    if (!G.has_vertex(v)) return 0;
    int s = 0;
    for (int e : G.parent().incident_edges(v)) {
        if (!G.has_edge_index(e)) continue;
        auto [a, b] = G.parent().edge(e);
        int w = (a == v) ? b : a;
        s += sign_on_pair(G.parent(), sigma, w, v);
    }
    return s;
}

Rational vertex_integral(const Subgraph& G, const Orientation& sigma, const VertexForm& f) {
    if (static_cast<int>(f.values.size()) != G.parent().vertex_count())
        throw std::invalid_argument("vertex_integral: form length mismatch");
    Rational total = 0;
    for (int v : G.vertex_list()) total += f.values[v] * Rational(net_degree(G, sigma, v));
    return total;
}

Rational edge_integral(const Subgraph& G, const Orientation& sigma, const EdgeForm& f) {
    if (static_cast<int>(f.values.size()) != G.parent().edge_count())
        throw std::invalid_argument("edge_integral: form length mismatch");
    Rational total = 0;
    for (int e : G.edge_list()) {
        auto [u, v] = G.parent().edge(e);
        total += edge_form_value(G.parent(), sigma, f, u, v) *
                 Rational(sign_on_pair(G.parent(), sigma, u, v));
    }
    return total;
}

StokesCertificate stokes_check(const Subgraph& G, const Orientation& sigma, const VertexForm& f) {
    StokesCertificate cert;
    cert.vertex_side = vertex_integral(G, sigma, f);
    cert.edge_side = edge_integral(G, sigma, coboundary(G.parent(), sigma, f));
    cert.equal = cert.vertex_side == cert.edge_side;
    return cert;
}

AdditivityCertificate integral_additivity_check(const Subgraph& g1, const Subgraph& g2,
                                                const Orientation& sigma, const VertexForm& f) {
    AdditivityCertificate cert;
    cert.lhs = vertex_integral(g1, sigma, f) + vertex_integral(g2, sigma, f);
    cert.rhs = vertex_integral(subgraph_union(g1, g2), sigma, f) +
               vertex_integral(subgraph_intersection(g1, g2), sigma, f);
    cert.equal = cert.lhs == cert.rhs;
    return cert;
}

AdditivityCertificate integral_additivity_check(const Subgraph& g1, const Subgraph& g2,
                                                const Orientation& sigma, const EdgeForm& f) {
    AdditivityCertificate cert;
    cert.lhs = edge_integral(g1, sigma, f) + edge_integral(g2, sigma, f);
    cert.rhs = edge_integral(subgraph_union(g1, g2), sigma, f) +
               edge_integral(subgraph_intersection(g1, g2), sigma, f);
    cert.equal = cert.lhs == cert.rhs;
    return cert;
}

namespace {

bool pairwise_orthogonal(const std::vector<RatVec>& xs, const std::vector<RatVec>& ys) {
    for (const auto& x : xs)
        for (const auto& y : ys)
            if (sgn(inner_product(x, y)) != 0) return false;
    return true;
}

// ker(A) = ker(B) via mutual containment plus equal dimension.
bool kernels_equal(const RationalMatrix& a, const RationalMatrix& b) {
    std::vector<RatVec> ka = kernel_basis(a), kb = kernel_basis(b);
    if (ka.size() != kb.size()) return false;
    for (const auto& v : ka)
        if (!gdr::is_zero(b * v)) return false;
    for (const auto& v : kb)
        if (!gdr::is_zero(a * v)) return false;
    return true;
}

} // namespace

HodgeCertificate hodge_decomposition(const Graph& g, const Orientation& sigma) {
    RationalMatrix inc = incidence_matrix(g, sigma); // D*
    RationalMatrix d = inc.transposed();             // D
    auto [lap_plus, lap_minus] = laplacians(g, sigma);

    HodgeCertificate cert;
    std::vector<RatVec> ker_plus = kernel_basis(lap_plus);
    std::vector<RatVec> im_inc = image_basis(inc);
    std::vector<RatVec> ker_minus = kernel_basis(lap_minus);
    std::vector<RatVec> im_d = image_basis(d);

    cert.vertex_kernel_dim = static_cast<int>(ker_plus.size());
    cert.vertex_image_dim = static_cast<int>(im_inc.size());
    cert.edge_kernel_dim = static_cast<int>(ker_minus.size());
    cert.edge_image_dim = static_cast<int>(im_d.size());
    cert.vertex_dims_ok = cert.vertex_kernel_dim + cert.vertex_image_dim == g.vertex_count();
    cert.edge_dims_ok = cert.edge_kernel_dim + cert.edge_image_dim == g.edge_count();
    cert.vertex_orthogonal = pairwise_orthogonal(ker_plus, im_inc);
    cert.edge_orthogonal = pairwise_orthogonal(ker_minus, im_d);
    cert.kernel_match_deg0 = kernels_equal(d, lap_plus);
    cert.kernel_match_deg1 = kernels_equal(inc, lap_minus);
    return cert;
}

} // namespace gdr
