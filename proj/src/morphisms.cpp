#include "gdr/morphisms.hpp"

#include <numeric>
#include <stdexcept>

namespace gdr {

GraphHomomorphism::GraphHomomorphism(Graph source, Graph target, std::vector<int> vertex_map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(vertex_map)) {
    if (static_cast<int>(map_.size()) != source_.vertex_count())
        throw std::invalid_argument("GraphHomomorphism: vertex map length mismatch");
    for (int img : map_)
        if (img < 0 || img >= target_.vertex_count())
            throw std::invalid_argument("GraphHomomorphism: image vertex out of range");
    edge_image_.resize(source_.edge_count());
    for (int e = 0; e < source_.edge_count(); ++e) {
        auto [u, v] = source_.edge(e);
        if (map_[u] == map_[v])
            throw std::invalid_argument("GraphHomomorphism: edge collapses to a loop");
        int te = target_.edge_index(map_[u], map_[v]);
        if (te < 0)
            throw std::invalid_argument("GraphHomomorphism: adjacency not preserved");
        edge_image_[e] = te;
    }
}

GraphHomomorphism GraphHomomorphism::identity(const Graph& g) {
    std::vector<int> id(g.vertex_count());
    std::iota(id.begin(), id.end(), 0);
    return GraphHomomorphism(g, g, std::move(id));
}

bool GraphHomomorphism::is_bijective_on_vertices() const {
    if (source_.vertex_count() != target_.vertex_count()) return false;
    std::vector<char> hit(target_.vertex_count(), 0);
    for (int img : map_) {
        if (hit[img]) return false;
        hit[img] = 1;
    }
    return true;
}

GraphHomomorphism compose(const GraphHomomorphism& g, const GraphHomomorphism& f) {
    if (!(f.target() == g.source()))
        throw std::invalid_argument("compose: inner target differs from outer source");
    std::vector<int> m(f.source().vertex_count());
    for (int v = 0; v < f.source().vertex_count(); ++v) m[v] = g(f(v));
    return GraphHomomorphism(f.source(), g.target(), std::move(m));
}

ChainVector pushforward(const GraphHomomorphism& h, const ChainVector& c) {
    ChainVector out;
    out.degree = c.degree;
    if (c.degree == 0) {
        if (static_cast<int>(c.coeffs.size()) != h.source().vertex_count())
            throw std::invalid_argument("pushforward: chain length mismatch");
        out.coeffs.assign(h.target().vertex_count(), Rational(0));
        for (int v = 0; v < h.source().vertex_count(); ++v) out.coeffs[h(v)] += c.coeffs[v];
        return out;
    }
    if (c.degree != 1) throw std::invalid_argument("pushforward: degree must be 0 or 1");
    if (static_cast<int>(c.coeffs.size()) != h.source().edge_count())
        throw std::invalid_argument("pushforward: chain length mismatch");
    out.coeffs.assign(h.target().edge_count(), Rational(0));
    for (int e = 0; e < h.source().edge_count(); ++e) {
        auto [u, v] = h.source().edge(e);
        // (u,v) maps to (h(u),h(v)); flip sign if the image pair is stored reversed.
        if (h(u) < h(v))
            out.coeffs[h.mapped_edge_index(e)] += c.coeffs[e];
        else
            out.coeffs[h.mapped_edge_index(e)] -= c.coeffs[e];
    }
    return out;
}

VertexForm pullback_vertex(const GraphHomomorphism& h, const VertexForm& f) {
    if (static_cast<int>(f.values.size()) != h.target().vertex_count())
        throw std::invalid_argument("pullback_vertex: form does not live on target");
    VertexForm out;
    out.values.resize(h.source().vertex_count());
    for (int v = 0; v < h.source().vertex_count(); ++v) out.values[v] = f.values[h(v)];
    return out;
}

EdgeForm pullback_edge(const GraphHomomorphism& h, const Orientation& source_sigma,
                       const Orientation& target_sigma, const EdgeForm& f) {
    if (static_cast<int>(f.values.size()) != h.target().edge_count())
        throw std::invalid_argument("pullback_edge: form does not live on target");
    EdgeForm out;
    out.values.resize(h.source().edge_count());
    for (int e = 0; e < h.source().edge_count(); ++e) {
        auto [u, v] = h.source().edge(e);
        // Coordinate at e is F*f on the sigma-positive traversal of e.
        int a = u, b = v;
        if (source_sigma.sign[e] < 0) std::swap(a, b);
        out.values[e] = edge_form_value(h.target(), target_sigma, f, h(a), h(b));
    }
    return out;
}

RationalMatrix pullback_omega_matrix(const GraphHomomorphism& h, const Orientation& source_sigma,
                                     const Orientation& target_sigma, int degree) {
    if (degree == 0) {
        RationalMatrix m(h.source().vertex_count(), h.target().vertex_count());
        for (int v = 0; v < h.source().vertex_count(); ++v) m(v, h(v)) = 1;
        return m;
    }
    if (degree != 1) throw std::invalid_argument("pullback_omega_matrix: degree must be 0 or 1");
    RationalMatrix m(h.source().edge_count(), h.target().edge_count());
    for (int e = 0; e < h.source().edge_count(); ++e) {
        auto [u, v] = h.source().edge(e);
        int a = u, b = v;
        if (source_sigma.sign[e] < 0) std::swap(a, b);
        int te = h.mapped_edge_index(e);
        m(e, te) = sign_on_pair(h.target(), target_sigma, h(a), h(b));
    }
    return m;
}

RationalMatrix induced_cohomology_map(const GraphHomomorphism& h, const Orientation& source_sigma,
                                      const Orientation& target_sigma,
                                      const CohomologySpace& source_space,
                                      const CohomologySpace& target_space) {
    if (source_space.degree != target_space.degree)
        throw std::invalid_argument("induced_cohomology_map: degree mismatch");
    if (source_space.degree == 0) {
        // F* of a component indicator is the sum of the source indicators of
        // the components mapped into it; read coordinates at representatives.
        ComponentPartition sc = connected_components(h.source());
        ComponentPartition tc = connected_components(h.target());
        RationalMatrix m(sc.count(), tc.count());
        for (int i = 0; i < sc.count(); ++i) {
            int img_comp = tc.label[h(sc.representative[i])];
            m(i, img_comp) = 1;
        }
        return m;
    }

    const bool automorphism =
        h.source() == h.target() && h.is_bijective_on_vertices();
    RationalMatrix incidence = incidence_matrix(h.source(), source_sigma);
    std::vector<RatVec> kernel_span;
    for (const EdgeForm& f : source_space.edge_basis) kernel_span.push_back(f.values);

    RationalMatrix m(source_space.dimension(), target_space.dimension());
    for (int j = 0; j < target_space.dimension(); ++j) {
        EdgeForm pulled = pullback_edge(h, source_sigma, target_sigma, target_space.edge_basis[j]);
        RatVec harmonic;
        if (gdr::is_zero(incidence * pulled.values)) {
            harmonic = pulled.values;
        } else {
            if (automorphism)
                throw std::logic_error(
                    "induced_cohomology_map: automorphism pullback left ker(D*)");
            harmonic = project_orthogonal(pulled.values, kernel_span);
        }
        EdgeForm hf{harmonic};
        RatVec coords = harmonic_coordinates(source_space, hf);
        for (int i = 0; i < source_space.dimension(); ++i) m(i, j) = coords[i];
    }
    return m;
}

RationalMatrix induced_cohomology_map(const GraphHomomorphism& h, const Orientation& source_sigma,
                                      const Orientation& target_sigma, int degree) {
    return induced_cohomology_map(h, source_sigma, target_sigma,
                                  cohomology(h.source(), source_sigma, degree),
                                  cohomology(h.target(), target_sigma, degree));
}

bool is_graph_isomorphism(const GraphHomomorphism& h) {
    if (!h.is_bijective_on_vertices()) return false;
    if (h.source().edge_count() != h.target().edge_count()) return false;
    // Bijective on vertices and edge counts agree: a homomorphism is then an
    // isomorphism iff distinct edges stay distinct.
    std::vector<char> hit(h.target().edge_count(), 0);
    for (int e = 0; e < h.source().edge_count(); ++e) {
        int te = h.mapped_edge_index(e);
        if (hit[te]) return false;
        hit[te] = 1;
    }
    return true;
}

} // namespace gdr
