#include "gdr/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace gdr {

Decomposition cycle_forest(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> alive(n, 1);
    std::vector<char> edge_alive(g.edge_count(), 1);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

    std::vector<std::vector<int>> layers;
    while (true) {
        std::vector<int> leaves;
        for (int v = 0; v < n; ++v)
            if (alive[v] && deg[v] == 1) leaves.push_back(v);
        if (leaves.empty()) break;
        // Simultaneous stripping: every current leaf goes in one layer.
        for (int v : leaves) {
            alive[v] = 0;
            for (int e : g.incident_edges(v)) {
                if (!edge_alive[e]) continue;
                edge_alive[e] = 0;
                auto [a, b] = g.edge(e);
                --deg[a];
                --deg[b];
            }
        }
        layers.push_back(std::move(leaves));
    }

    // Vertices stripped down to isolation belong to the forest side (the
    // retract keeps minimum valency >= 2); they form one final stratum.
    std::vector<int> strays;
    for (int v = 0; v < n; ++v)
        if (alive[v] && deg[v] == 0) strays.push_back(v);
    for (int v : strays) alive[v] = 0;
    if (!strays.empty()) layers.push_back(strays);

    std::vector<char> cyc_v(n, 0), cyc_e(g.edge_count(), 0);
    std::vector<char> f_v(n, 0), f_e(g.edge_count(), 0);
    for (int v = 0; v < n; ++v) (alive[v] ? cyc_v : f_v)[v] = 1;
    std::vector<int> intersection;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (edge_alive[e]) {
            cyc_e[e] = 1;
        } else {
            f_e[e] = 1;
            // A surviving endpoint of a stripped edge is an intersection
            // vertex and belongs to both parts.
            for (int w : {u, v})
                if (alive[w] && !f_v[w]) {
                    f_v[w] = 1;
                    intersection.push_back(w);
                }
        }
    }
    std::sort(intersection.begin(), intersection.end());

    Decomposition d{Subgraph(g, f_v, f_e), Subgraph(g, cyc_v, cyc_e), std::move(intersection),
                    std::move(layers)};
    return d;
}

RetractData retract_homomorphism(const Graph& g, const Decomposition& d) {
    if (d.cycle_retract.is_empty())
        throw std::invalid_argument("retract_homomorphism: cycle retract is empty");
    MaterializedSubgraph cyc = materialize(d.cycle_retract);

    std::vector<int> map(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (d.cycle_retract.has_vertex(v)) map[v] = cyc.vertex_map[v];

    // Fold each forest component onto one retract edge via the bipartition
    // of the tree: even distance from the anchor goes to it, odd distance to
    // a fixed retract neighbor.
    std::vector<char> in_forest = d.forest.vertex_mask();
    std::vector<char> visited(g.vertex_count(), 0);
    std::set<int> inter(d.intersection_vertices.begin(), d.intersection_vertices.end());
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (!in_forest[s] || visited[s]) continue;
        // Collect this forest component.
        std::vector<int> comp;
        std::deque<int> queue{s};
        visited[s] = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            comp.push_back(v);
            for (int e : g.incident_edges(v)) {
                if (!d.forest.has_edge_index(e)) continue;
                auto [a, b] = g.edge(e);
                int w = (a == v) ? b : a;
                if (!visited[w]) {
                    visited[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        int anchor = -1;
        for (int v : comp)
            if (inter.count(v)) { anchor = v; break; }
        int head, tail;
        if (anchor >= 0) {
            head = cyc.vertex_map[anchor];
            // smallest retract neighbor of the anchor
            tail = -1;
            for (int e : g.incident_edges(anchor)) {
                if (!d.cycle_retract.has_edge_index(e)) continue;
                auto [a, b] = g.edge(e);
                int w = (a == anchor) ? b : a;
                int nw = cyc.vertex_map[w];
                if (tail < 0 || nw < tail) tail = nw;
            }
        } else {
            // A whole tree component of Γ: no anchor, fold onto the first
            // retract edge from its root.
            anchor = *std::min_element(comp.begin(), comp.end());
            head = cyc.graph.edge(0).first;
            tail = cyc.graph.edge(0).second;
        }
        // BFS distances from the anchor inside the forest component.
        std::vector<int> dist(g.vertex_count(), -1);
        std::deque<int> bfs{anchor};
        dist[anchor] = 0;
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop_front();
            for (int e : g.incident_edges(v)) {
                if (!d.forest.has_edge_index(e)) continue;
                auto [a, b] = g.edge(e);
                int w = (a == v) ? b : a;
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    bfs.push_back(w);
                }
            }
        }
        for (int v : comp)
            if (map[v] < 0) map[v] = (dist[v] % 2 == 0) ? head : tail;
    }

    GraphHomomorphism retraction(g, cyc.graph, map);
    GraphHomomorphism inclusion(cyc.graph, g, cyc.parent_vertex);
    return RetractData{std::move(cyc), std::move(retraction), std::move(inclusion)};
}

MinimalityCertificate verify_minimality(const Graph& g) {
    Decomposition d = cycle_forest(g);
    MinimalityCertificate cert;
    if (d.cycle_retract.is_empty()) {
        cert.forest_case = true;
        cert.gamma_betti = betti_numbers(g);
        return cert;
    }
    MaterializedSubgraph cyc = materialize(d.cycle_retract);
    cert.gamma_betti = betti_numbers(g);
    cert.cyc_betti = betti_numbers(cyc.graph);
    cert.betti_match = cert.gamma_betti == cert.cyc_betti;

    cert.every_edge_essential = true;
    for (int e = 0; e < cyc.graph.edge_count(); ++e) {
        std::vector<std::pair<int, int>> pruned;
        for (int f = 0; f < cyc.graph.edge_count(); ++f)
            if (f != e) pruned.push_back(cyc.graph.edge(f));
        Graph h = Graph::build(cyc.graph.vertex_count(), pruned);
        if (betti_numbers(h) == cert.cyc_betti) {
            cert.every_edge_essential = false;
            cert.inessential_edges.push_back(cyc.parent_edge[e]);
        }
    }
    return cert;
}

RestrictionCertificate aut_restriction_check(const Graph& g) {
    Decomposition d = cycle_forest(g);
    PermutationGroup aut = automorphism_group(g);
    RestrictionCertificate cert;
    cert.aut_order = aut.order();
    cert.forest_preserved = cert.retract_preserved = cert.intersection_permuted = true;

    std::set<int> inter(d.intersection_vertices.begin(), d.intersection_vertices.end());
    for (const Permutation& p : aut.elements) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (d.forest.has_vertex(v) != d.forest.has_vertex(p(v))) cert.forest_preserved = false;
            if (d.cycle_retract.has_vertex(v) != d.cycle_retract.has_vertex(p(v)))
                cert.retract_preserved = false;
        }
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edge(e);
            int pe = g.edge_index(p(u), p(v));
            if (d.forest.has_edge_index(e) != d.forest.has_edge_index(pe))
                cert.forest_preserved = false;
            if (d.cycle_retract.has_edge_index(e) != d.cycle_retract.has_edge_index(pe))
                cert.retract_preserved = false;
        }
        for (int v : inter)
            if (!inter.count(p(v))) cert.intersection_permuted = false;
    }
    return cert;
}

KernelInterpretationCertificate kernel_interpretation(const Graph& g, const Orientation& sigma) {
    auto [b0, b1] = betti_numbers(g);
    if (b0 != 1 || b1 < 2)
        throw std::invalid_argument("kernel_interpretation: connected graph with b1 >= 2 required");

    Decomposition d = cycle_forest(g);
    PermutationGroup aut = automorphism_group(g);
    std::vector<Permutation> kernel = phi_kernel(g, sigma, 1, aut);

    KernelInterpretationCertificate cert;
    cert.kernel_order = static_cast<long>(kernel.size());

    // S <= Aut(F) fixing the intersection vertices pointwise, on the forest
    // as a standalone graph.
    std::vector<Permutation> s_elements;
    MaterializedSubgraph forest = materialize(d.forest);
    if (forest.graph.vertex_count() == 0) {
        s_elements.push_back(Permutation::identity(0));
    } else {
        PermutationGroup aut_f = automorphism_group(forest.graph);
        for (const Permutation& p : aut_f.elements) {
            bool fixes = true;
            for (int v : d.intersection_vertices)
                if (p(forest.vertex_map[v]) != forest.vertex_map[v]) { fixes = false; break; }
            if (fixes) s_elements.push_back(p);
        }
    }
    cert.s_order = static_cast<long>(s_elements.size());

    // eta: extend by the identity on Cyc.
    auto eta = [&](const Permutation& s) {
        Permutation e = Permutation::identity(g.vertex_count());
        for (int nv = 0; nv < forest.graph.vertex_count(); ++nv)
            e.images[forest.parent_vertex[nv]] = forest.parent_vertex[s(nv)];
        return e;
    };

    CohomologySpace h1 = cohomology(g, sigma, 1);
    std::vector<Permutation> image;
    cert.eta_lands_in_kernel = true;
    for (const Permutation& s : s_elements) {
        Permutation e = eta(s);
        try {
            to_homomorphism(g, e); // validates e is an automorphism of Γ
            if (!in_phi_kernel(g, sigma, h1, e)) cert.eta_lands_in_kernel = false;
        } catch (const std::invalid_argument&) {
            cert.eta_lands_in_kernel = false;
        }
        image.push_back(e);
    }
    std::vector<Permutation> sorted_image = image;
    std::sort(sorted_image.begin(), sorted_image.end());
    cert.injective =
        std::adjacent_find(sorted_image.begin(), sorted_image.end()) == sorted_image.end();
    std::vector<Permutation> sorted_kernel = kernel;
    std::sort(sorted_kernel.begin(), sorted_kernel.end());
    cert.surjective = sorted_image == sorted_kernel;

    cert.homomorphism = true;
    for (const Permutation& s : s_elements)
        for (const Permutation& t : s_elements)
            if (!(eta(s * t) == eta(s) * eta(t))) { cert.homomorphism = false; break; }
    return cert;
}

SplittingReport splitting_verification(const Graph& g, const Orientation& sigma) {
    SplittingReport rep;
    auto [b0, b1] = betti_numbers(g);
    if (b0 != 1) rep.failed_hypotheses.push_back("not connected");
    if (b1 < 2) rep.failed_hypotheses.push_back("b1 < 2");

    Decomposition d = cycle_forest(g);
    if (b0 == 1) {
        MaterializedSubgraph forest = materialize(d.forest);
        if (forest.graph.vertex_count() > 0) {
            InducedActionGroup h0f = induced_action(forest.graph, Orientation::all_plus(forest.graph), 0);
            if (h0f.induced_order() != 1) rep.failed_hypotheses.push_back("H0(F) nontrivial");
        }
    }
    rep.hypotheses_met = rep.failed_hypotheses.empty();
    if (!rep.hypotheses_met) return rep;

    PermutationGroup aut = automorphism_group(g);
    rep.aut_order = aut.order();
    InducedActionGroup act = induced_action(g, sigma, 1, aut);
    rep.kernel_order = act.kernel_order();
    rep.induced_order = act.induced_order();

    std::vector<Permutation> K = act.kernel; // sorted (aut.elements is sorted)
    std::vector<Permutation> Y;
    for (const Permutation& p : aut.elements) {
        bool fixes_forest = true;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (d.forest.has_vertex(v) && p(v) != v) { fixes_forest = false; break; }
        if (fixes_forest) Y.push_back(p);
    }
    rep.y_order = static_cast<long>(Y.size());

    rep.trivial_intersection = true;
    {
        std::vector<Permutation> both;
        std::set_intersection(K.begin(), K.end(), Y.begin(), Y.end(), std::back_inserter(both));
        rep.trivial_intersection =
            both.size() == 1 && both[0] == Permutation::identity(g.vertex_count());
    }

    std::set<Permutation> products;
    rep.commute = true;
    for (const Permutation& k : K)
        for (const Permutation& y : Y) {
            products.insert(k * y);
            if (!(k * y == y * k)) rep.commute = false;
        }
    rep.product_covers = static_cast<long>(products.size()) == rep.aut_order;
    rep.order_product = rep.aut_order == rep.kernel_order * rep.induced_order;

    rep.kernel_fixes_retract = true;
    for (const Permutation& k : K)
        for (int v = 0; v < g.vertex_count(); ++v)
            if (d.cycle_retract.has_vertex(v) && k(v) != v) rep.kernel_fixes_retract = false;

    // theta: phi restricted to Y must reach every induced operator exactly once.
    std::vector<RationalMatrix> y_images;
    for (const Permutation& y : Y) {
        for (const auto& [p, m] : act.elements)
            if (p == y) { y_images.push_back(m); break; }
    }
    std::sort(y_images.begin(), y_images.end(),
              [](const RationalMatrix& a, const RationalMatrix& b) { return compare(a, b) < 0; });
    bool distinct = true;
    for (size_t i = 0; i + 1 < y_images.size(); ++i)
        if (y_images[i] == y_images[i + 1]) distinct = false;
    rep.theta_iso = distinct && y_images == act.induced_matrices;
    return rep;
}

} // namespace gdr
