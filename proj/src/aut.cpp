#include "gdr/aut.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gdr/decomposition.hpp"

namespace gdr {

Permutation Permutation::identity(int n) {
    Permutation p;
    p.images.resize(n);
    std::iota(p.images.begin(), p.images.end(), 0);
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (images[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation inv;
    inv.images.resize(size());
    for (int i = 0; i < size(); ++i) inv.images[images[i]] = i;
    return inv;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("permutation product: size mismatch");
    Permutation c;
    c.images.resize(a.size());
    for (int i = 0; i < a.size(); ++i) c.images[i] = a.images[b.images[i]];
    return c;
}

std::string cycle_notation(const Permutation& p) {
    std::ostringstream out;
    std::vector<char> seen(p.size(), 0);
    bool any = false;
    for (int i = 0; i < p.size(); ++i) {
        if (seen[i] || p(i) == i) continue;
        any = true;
        out << '(' << i;
        seen[i] = 1;
        for (int j = p(i); j != i; j = p(j)) {
            out << ' ' << j;
            seen[j] = 1;
        }
        out << ')';
    }
    return any ? out.str() : std::string("id");
}

bool PermutationGroup::contains(const Permutation& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
}

namespace {

// Equitable refinement: start from degrees, split classes by the multiset of
// neighbor classes until stable. Class ids are rank-ordered so the result is
// deterministic.
std::vector<int> equitable_coloring(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s{color[v]};
            for (int w : g.neighbors(v)) s.push_back(color[w]);
            std::sort(s.begin() + 1, s.end());
            sig[v] = {std::move(s), v};
        }
        std::vector<std::pair<std::vector<int>, int>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(n);
        int c = -1;
        for (int i = 0; i < n; ++i) {
            if (i == 0 || sorted[i].first != sorted[i - 1].first) ++c;
            next[sorted[i].second] = c;
        }
        if (next == color) return color;
        color = std::move(next);
    }
}

struct AutSearch {
    const Graph& g;
    int n;
    std::vector<uint64_t> adj;      // adjacency masks (n <= 64)
    std::vector<int> color;
    std::vector<int> order;         // vertex assignment order
    std::vector<int> image;         // partial map, -1 unassigned
    std::vector<char> used;
    std::vector<Permutation>& out;

    void run() {
        search(0);
    }

    void search(size_t k) {
        if (k == order.size()) {
            Permutation p;
            p.images = image;
            out.push_back(p);
            return;
        }
        int v = order[k];
        for (int w = 0; w < n; ++w) {
            if (used[w] || color[w] != color[v]) continue;
            // w must relate to already-chosen images exactly as v does to
            // the corresponding sources.
            bool ok = true;
            for (size_t j = 0; j < k; ++j) {
                int u = order[j];
                bool a = (adj[v] >> u) & 1;
                bool b = (adj[w] >> image[u]) & 1;
                if (a != b) { ok = false; break; }
            }
            if (!ok) continue;
            image[v] = w;
            used[w] = 1;
            search(k + 1);
            used[w] = 0;
            image[v] = -1;
        }
    }
};

} // namespace

PermutationGroup automorphism_group(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("automorphism_group: empty graph");
    if (n > 64) throw std::invalid_argument("automorphism_group: graph beyond desk scale");

    std::vector<uint64_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= uint64_t(1) << v;
        adj[v] |= uint64_t(1) << u;
    }
    std::vector<int> color = equitable_coloring(g);

    // Assignment order: cells ascending by size (smallest non-singleton cells
    // constrain the search earliest), vertices ascending inside a cell.
    std::map<int, std::vector<int>> cells;
    for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
    std::vector<std::pair<size_t, int>> cell_order;
    for (auto& [c, vs] : cells) cell_order.push_back({vs.size(), c});
    std::sort(cell_order.begin(), cell_order.end());
    std::vector<int> order;
    for (auto& [sz, c] : cell_order)
        for (int v : cells[c]) order.push_back(v);

    PermutationGroup grp;
    AutSearch search{g, n, adj, color, order, std::vector<int>(n, -1),
                     std::vector<char>(n, 0), grp.elements};
    search.run();
    std::sort(grp.elements.begin(), grp.elements.end());

    // Greedy generators: walk the sorted elements, keep those that enlarge
    // the generated subgroup, then drop any that turn out redundant.
    auto closure = [n](const std::vector<Permutation>& gens) {
        std::set<Permutation> seen{Permutation::identity(n)};
        std::vector<Permutation> frontier{Permutation::identity(n)};
        while (!frontier.empty()) {
            std::vector<Permutation> next;
            for (const Permutation& x : frontier)
                for (const Permutation& h : gens) {
                    Permutation y = h * x;
                    if (seen.insert(y).second) next.push_back(y);
                }
            frontier = std::move(next);
        }
        return seen;
    };
    std::set<Permutation> have{Permutation::identity(n)};
    for (const Permutation& p : grp.elements) {
        if (have.count(p)) continue;
        grp.generators.push_back(p);
        have = closure(grp.generators);
        if (static_cast<long>(have.size()) == grp.order()) break;
    }
    for (size_t i = grp.generators.size(); i-- > 0;) {
        std::vector<Permutation> trial = grp.generators;
        trial.erase(trial.begin() + i);
        if (static_cast<long>(closure(trial).size()) == grp.order()) grp.generators = trial;
    }
    return grp;
}

GraphHomomorphism to_homomorphism(const Graph& g, const Permutation& p) {
    return GraphHomomorphism(g, g, p.images);
}

namespace {

// Matrix of g* on the harmonic basis (columns = coordinates of pulled-back
// basis elements). phi(g) is its inverse.
RationalMatrix pullback_matrix_on_basis(const Graph& g, const Orientation& sigma,
                                        const CohomologySpace& space, const Permutation& p) {
    GraphHomomorphism h = to_homomorphism(g, p);
    const int d = space.dimension();
    RationalMatrix m(d, d);
    if (space.degree == 0) {
        ComponentPartition comps = connected_components(g);
        for (int j = 0; j < d; ++j) {
            VertexForm pulled = pullback_vertex(h, space.vertex_basis[j]);
            for (int i = 0; i < d; ++i) m(i, j) = pulled.values[comps.representative[i]];
        }
        return m;
    }
    for (int j = 0; j < d; ++j) {
        EdgeForm pulled = pullback_edge(h, sigma, sigma, space.edge_basis[j]);
        if (!in_cycle_space(g, sigma, pulled))
            throw std::logic_error("induced_action: automorphism pullback left ker(D*)");
        RatVec coords = harmonic_coordinates(space, pulled);
        for (int i = 0; i < d; ++i) m(i, j) = coords[i];
    }
    return m;
}

} // namespace

InducedActionGroup induced_action(const Graph& g, const Orientation& sigma, int degree,
                                  const PermutationGroup& aut) {
    CohomologySpace space = cohomology(g, sigma, degree);
    InducedActionGroup act;
    act.degree = degree;
    for (const Permutation& p : aut.elements) {
        RationalMatrix pb = pullback_matrix_on_basis(g, sigma, space, p);
        if (pb.is_identity()) act.kernel.push_back(p);
        act.elements.emplace_back(p, inverse(pb));
    }
    std::vector<RationalMatrix> distinct;
    for (const auto& [p, m] : act.elements) distinct.push_back(m);
    std::sort(distinct.begin(), distinct.end(),
              [](const RationalMatrix& x, const RationalMatrix& y) { return compare(x, y) < 0; });
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    act.induced_matrices = std::move(distinct);
    return act;
}

InducedActionGroup induced_action(const Graph& g, const Orientation& sigma, int degree) {
    return induced_action(g, sigma, degree, automorphism_group(g));
}

bool in_phi_kernel(const Graph& g, const Orientation& sigma, const CohomologySpace& space,
                   const Permutation& p) {
    GraphHomomorphism h = to_homomorphism(g, p);
    if (space.degree == 0) {
        for (const VertexForm& f : space.vertex_basis)
            if (pullback_vertex(h, f).values != f.values) return false;
        return true;
    }
    for (const EdgeForm& f : space.edge_basis)
        if (pullback_edge(h, sigma, sigma, f).values != f.values) return false;
    return true;
}

std::vector<Permutation> phi_kernel(const Graph& g, const Orientation& sigma, int degree,
                                    const PermutationGroup& aut) {
    CohomologySpace space = cohomology(g, sigma, degree);
    std::vector<Permutation> kernel;
    for (const Permutation& p : aut.elements)
        if (in_phi_kernel(g, sigma, space, p)) kernel.push_back(p);
    return kernel;
}

KernelCharacterizationReport kernel_characterization_h0(const Graph& g) {
    PermutationGroup aut = automorphism_group(g);
    CohomologySpace space = cohomology(g, Orientation::all_plus(g), 0);
    ComponentPartition comps = connected_components(g);

    KernelCharacterizationReport report;
    report.degree = 0;
    report.all_agree = true;
    for (const Permutation& p : aut.elements) {
        KernelAgreement a;
        a.element = p;
        a.matrix_member = in_phi_kernel(g, Orientation::all_plus(g), space, p);
        a.combinatorial_member = true;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (comps.label[p(v)] != comps.label[v]) { a.combinatorial_member = false; break; }
        if (a.matrix_member != a.combinatorial_member) report.all_agree = false;
        if (a.matrix_member) ++report.kernel_order;
        report.per_element.push_back(std::move(a));
    }
    return report;
}

namespace {

// True when p restricted to the cycle (given in cyclic vertex order) is an
// index shift: p(x_j) = x_{j+m mod k} for a fixed m. Reflections fail.
bool is_rotation_on_cycle(const Permutation& p, const std::vector<int>& cycle) {
    const int k = static_cast<int>(cycle.size());
    std::vector<int> pos;
    int maxv = 0;
    for (int v : cycle) maxv = std::max(maxv, v);
    pos.assign(maxv + 1, -1);
    for (int j = 0; j < k; ++j) pos[cycle[j]] = j;

    auto position_of = [&](int v) {
        return (v <= maxv) ? pos[v] : -1;
    };
    int m0 = position_of(p(cycle[0]));
    if (m0 < 0) return false;
    for (int j = 0; j < k; ++j) {
        int q = position_of(p(cycle[j]));
        if (q < 0 || q != (j + m0) % k) return false;
    }
    return true;
}

} // namespace

KernelCharacterizationReport kernel_characterization_h1(const Graph& g, const Orientation& sigma) {
    if (betti_numbers(g).second < 1)
        throw std::invalid_argument("kernel_characterization_h1: b1 >= 1 required");
    PermutationGroup aut = automorphism_group(g);
    CohomologySpace space = cohomology(g, sigma, 1);

    KernelCharacterizationReport report;
    report.degree = 1;
    report.all_agree = true;
    for (const Permutation& p : aut.elements) {
        KernelAgreement a;
        a.element = p;
        a.matrix_member = in_phi_kernel(g, sigma, space, p);
        a.combinatorial_member = true;
        for (const auto& cycle : space.support_cycles)
            if (!is_rotation_on_cycle(p, cycle)) { a.combinatorial_member = false; break; }
        if (a.matrix_member != a.combinatorial_member) report.all_agree = false;
        if (a.matrix_member) ++report.kernel_order;
        report.per_element.push_back(std::move(a));
    }
    return report;
}

B1OneClassification classify_b1_one(const Graph& g) {
    auto [b0, b1] = betti_numbers(g);
    if (b0 != 1 || b1 != 1)
        throw std::invalid_argument("classify_b1_one: connected graph with b1 = 1 required");

    Orientation sigma = Orientation::all_plus(g);
    InducedActionGroup act = induced_action(g, sigma, 1);
    B1OneClassification out;
    out.z2 = act.induced_order() == 2;

    Decomposition dec = cycle_forest(g);
    if (dec.forest.is_empty()) {
        out.condition = B1OneCondition::ForestEmpty;
        return out;
    }
    MaterializedSubgraph forest = materialize(dec.forest);
    int forest_components = connected_components(forest.graph).count();
    if (forest_components == 1) {
        out.condition = B1OneCondition::ForestConnected;
        return out;
    }
    if (forest_components == 2 && dec.intersection_vertices.size() == 2) {
        // Cyc must be an even cycle with the two intersection vertices
        // antipodal (both arcs of equal length).
        MaterializedSubgraph cyc = materialize(dec.cycle_retract);
        const Graph& c = cyc.graph;
        bool is_cycle = c.vertex_count() >= 3 && c.edge_count() == c.vertex_count() &&
                        connected_components(c).count() == 1;
        for (int v = 0; is_cycle && v < c.vertex_count(); ++v)
            if (c.degree(v) != 2) is_cycle = false;
        if (is_cycle && c.vertex_count() % 2 == 0) {
            int s = cyc.vertex_map[dec.intersection_vertices[0]];
            int t = cyc.vertex_map[dec.intersection_vertices[1]];
            // walk the cycle from s and find t's offset
            int prev = s, cur = c.neighbors(s)[0], dist = 1;
            while (cur != t && cur != s) {
                int nxt = -1;
                for (int w : c.neighbors(cur))
                    if (w != prev) { nxt = w; break; }
                prev = cur;
                cur = nxt;
                ++dist;
            }
            if (cur == t && dist == c.vertex_count() / 2)
                out.condition = B1OneCondition::AntipodalPair;
        }
    }
    return out;
}

namespace {

template <typename Elem, typename Mul, typename Eq, typename Less>
GroupProfile profile_elements(const std::vector<Elem>& elems, const Elem& id, Mul mul, Eq eq,
                              Less less, const std::vector<std::string>& names) {
    GroupProfile prof;
    prof.order = static_cast<long>(elems.size());
    for (size_t i = 0; i < elems.size(); ++i) {
        Elem power = elems[i];
        long ord = 1;
        while (!eq(power, id)) {
            power = mul(power, elems[i]);
            ++ord;
        }
        prof.element_order_histogram[ord]++;
    }
    prof.cyclic = prof.element_order_histogram.count(prof.order) > 0 || prof.order == 1;

    // Greedy generating subset over the sorted element list.
    std::vector<Elem> gens;
    std::vector<size_t> gen_idx;
    auto closure_size = [&](const std::vector<Elem>& gs) {
        std::vector<Elem> seen{id};
        std::vector<Elem> frontier{id};
        auto sorted_insert = [&](const Elem& x) {
            auto it = std::lower_bound(seen.begin(), seen.end(), x, less);
            if (it != seen.end() && eq(*it, x)) return false;
            seen.insert(it, x);
            return true;
        };
        while (!frontier.empty()) {
            std::vector<Elem> next;
            for (const Elem& x : frontier)
                for (const Elem& h : gs) {
                    Elem y = mul(h, x);
                    if (sorted_insert(y)) next.push_back(y);
                }
            frontier = std::move(next);
        }
        return static_cast<long>(seen.size());
    };
    long covered = 1;
    for (size_t i = 0; i < elems.size() && covered < prof.order; ++i) {
        if (eq(elems[i], id)) continue;
        std::vector<Elem> trial = gens;
        trial.push_back(elems[i]);
        long sz = closure_size(trial);
        if (sz > covered) {
            gens = std::move(trial);
            gen_idx.push_back(i);
            covered = sz;
        }
    }
    prof.abelian = true;
    for (size_t i = 0; i < gens.size() && prof.abelian; ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            if (!eq(mul(gens[i], gens[j]), mul(gens[j], gens[i]))) { prof.abelian = false; break; }
    for (size_t i : gen_idx) prof.generators.push_back(names[i]);
    return prof;
}

} // namespace

GroupProfile group_profile(const PermutationGroup& g) {
    if (g.elements.empty()) throw std::invalid_argument("group_profile: empty element list");
    std::vector<std::string> names;
    for (const Permutation& p : g.elements) names.push_back(cycle_notation(p));
    return profile_elements(
        g.elements, Permutation::identity(g.elements[0].size()),
        [](const Permutation& a, const Permutation& b) { return a * b; },
        [](const Permutation& a, const Permutation& b) { return a == b; },
        [](const Permutation& a, const Permutation& b) { return a < b; }, names);
}

GroupProfile group_profile(const InducedActionGroup& g) {
    const auto& mats = g.induced_matrices;
    if (mats.empty()) throw std::invalid_argument("group_profile: empty induced group");
    int d = mats[0].rows();
    std::vector<std::string> names;
    for (size_t i = 0; i < mats.size(); ++i) names.push_back("m" + std::to_string(i));
    return profile_elements(
        mats, RationalMatrix::identity(d),
        [](const RationalMatrix& a, const RationalMatrix& b) { return a * b; },
        [](const RationalMatrix& a, const RationalMatrix& b) { return a == b; },
        [](const RationalMatrix& a, const RationalMatrix& b) { return compare(a, b) < 0; }, names);
}

} // namespace gdr
