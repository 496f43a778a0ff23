#pragma once

#include <string>
#include <vector>

#include "gdr/aut.hpp"
#include "gdr/graph.hpp"
#include "gdr/morphisms.hpp"

namespace gdr {

/// Cycle-forest decomposition: F(Γ) is the contractible forest grown by
/// iterated leaf stripping (plus any vertices stripped down to isolation),
/// Cyc(Γ) is what remains and has minimum valency >= 2 when nonempty.
/// Forest edges and retract edges partition E(Γ).
struct Decomposition {
    Subgraph forest;
    Subgraph cycle_retract;
    std::vector<int> intersection_vertices;  // sorted; vertices in both parts
    std::vector<std::vector<int>> layers;    // F_1, F_2, ... leaf strata
};

Decomposition cycle_forest(const Graph& g);

/// Retraction data: Cyc(Γ) re-indexed as a standalone graph, the fold
/// Γ -> Cyc(Γ) (each forest component collapses onto one retract edge by
/// distance parity from its intersection vertex), and the inclusion going
/// back. retraction ∘ inclusion is the identity on Cyc(Γ).
struct RetractData {
    MaterializedSubgraph cyc;
    GraphHomomorphism retraction; // Γ -> cyc.graph
    GraphHomomorphism inclusion;  // cyc.graph -> Γ
};

RetractData retract_homomorphism(const Graph& g, const Decomposition& d);

struct MinimalityCertificate {
    bool forest_case = false;      // Cyc empty by convention; vacuously minimal
    bool betti_match = false;      // (b0,b1) of Cyc equals that of Γ
    bool every_edge_essential = false;
    std::pair<int, int> gamma_betti{0, 0};
    std::pair<int, int> cyc_betti{0, 0};
    std::vector<int> inessential_edges; // parent edge ids whose removal keeps (b0,b1)
    bool ok() const { return forest_case || (betti_match && every_edge_essential); }
};

/// Checks Cyc(Γ) is a smallest cohomology-equivalent subgraph: Betti pairs
/// agree and removing any single retract edge changes them.
MinimalityCertificate verify_minimality(const Graph& g);

struct RestrictionCertificate {
    bool forest_preserved = false;
    bool retract_preserved = false;
    bool intersection_permuted = false;
    long aut_order = 0;
    bool ok() const { return forest_preserved && retract_preserved && intersection_permuted; }
};

/// Every automorphism maps F(Γ) to F(Γ), Cyc(Γ) to Cyc(Γ) (vertex and edge
/// sets) and permutes the intersection vertices.
RestrictionCertificate aut_restriction_check(const Graph& g);

struct KernelInterpretationCertificate {
    long s_order = 0;       // |S|, automorphisms of F fixing intersection vertices pointwise
    long kernel_order = 0;  // |ker(phi^1)|
    bool eta_lands_in_kernel = false;
    bool injective = false;
    bool surjective = false;
    bool homomorphism = false;
    bool ok() const { return eta_lands_in_kernel && injective && surjective && homomorphism; }
};

/// Verifies eta: S -> ker(phi^1), extension by the identity on Cyc(Γ), is a
/// group isomorphism. Requires Γ connected with b1 >= 2.
KernelInterpretationCertificate kernel_interpretation(const Graph& g, const Orientation& sigma);

struct SplittingReport {
    bool hypotheses_met = false;
    std::vector<std::string> failed_hypotheses; // "not connected", "b1 < 2", "H0(F) nontrivial"
    long aut_order = 0;
    long kernel_order = 0;   // |K|
    long y_order = 0;        // |Y|, automorphisms fixing F(Γ) pointwise
    long induced_order = 0;  // |H^1(Γ)|
    bool trivial_intersection = false; // K ∩ Y = {id}
    bool product_covers = false;       // K·Y = Aut(Γ)
    bool commute = false;              // [K,Y] = {id}
    bool order_product = false;        // |Aut| = |K|·|H^1|
    bool kernel_fixes_retract = false; // K elements fix Cyc(Γ) pointwise
    bool theta_iso = false;            // Y ≅ H^1(Γ) via phi restricted to Y
    bool ok() const {
        return hypotheses_met && trivial_intersection && product_covers && commute &&
               order_product && kernel_fixes_retract && theta_iso;
    }
};

/// Internal-direct-product certificate for Aut(Γ) ≅ ker(phi^1) × H^1(Γ).
/// Hypotheses (connected, b1 >= 2, trivial H^0(F(Γ))) are checked here and
/// reported when violated instead of throwing.
SplittingReport splitting_verification(const Graph& g, const Orientation& sigma);

} // namespace gdr
