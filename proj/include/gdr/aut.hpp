#pragma once

#include <map>
#include <string>
#include <vector>

#include "gdr/cochain.hpp"
#include "gdr/graph.hpp"
#include "gdr/matrix.hpp"
#include "gdr/morphisms.hpp"

namespace gdr {

struct Permutation {
    std::vector<int> images; // images[i] = image of vertex i

    static Permutation identity(int n);
    int size() const { return static_cast<int>(images.size()); }
    int operator()(int v) const { return images[v]; }
    bool is_identity() const;
    Permutation inverse() const;

    friend Permutation operator*(const Permutation& a, const Permutation& b); // (a*b)(v) = a(b(v))
    friend bool operator==(const Permutation& a, const Permutation& b) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) = default;
};

std::string cycle_notation(const Permutation& p);

struct PermutationGroup {
    std::vector<Permutation> elements;   // sorted lexicographically, closed, contains identity
    std::vector<Permutation> generators; // greedy generating subset
    long order() const { return static_cast<long>(elements.size()); }
    bool contains(const Permutation& p) const;
};

/// All adjacency-preserving vertex bijections, found by backtracking over a
/// degree-refined ordered partition (refined by neighbor-class multisets to
/// a fixed point; branching starts from the smallest non-singleton cell).
PermutationGroup automorphism_group(const Graph& g);

GraphHomomorphism to_homomorphism(const Graph& g, const Permutation& p);

/// phi(g) = (g*)^{-1} realized on the harmonic basis of H^degree.
struct InducedActionGroup {
    int degree = 0;
    std::vector<std::pair<Permutation, RationalMatrix>> elements; // (g, phi(g)), sorted by g
    std::vector<Permutation> kernel;                              // phi(g) = identity
    std::vector<RationalMatrix> induced_matrices;                 // distinct values, sorted
    long kernel_order() const { return static_cast<long>(kernel.size()); }
    long induced_order() const { return static_cast<long>(induced_matrices.size()); }
};

InducedActionGroup induced_action(const Graph& g, const Orientation& sigma, int degree,
                                  const PermutationGroup& aut);
InducedActionGroup induced_action(const Graph& g, const Orientation& sigma, int degree);

/// Exact fixed-form membership test, g in ker(phi): g*f = f for every basis
/// form. Early-exits on the first moved basis element, so the exhaustive
/// suites can avoid materializing matrix groups.
bool in_phi_kernel(const Graph& g, const Orientation& sigma, const CohomologySpace& space,
                   const Permutation& p);

std::vector<Permutation> phi_kernel(const Graph& g, const Orientation& sigma, int degree,
                                    const PermutationGroup& aut);

/// Per-automorphism comparison of kernel membership computed two ways.
struct KernelAgreement {
    Permutation element;
    bool matrix_member = false;
    bool combinatorial_member = false;
};

struct KernelCharacterizationReport {
    int degree = 0;
    bool all_agree = false;
    long kernel_order = 0;
    std::vector<KernelAgreement> per_element;
};

/// ker(phi^0) vs "g maps every vertex into its own component".
KernelCharacterizationReport kernel_characterization_h0(const Graph& g);

/// ker(phi^1) vs "g restricts to an orientation-preserving rotation on the
/// support of every basis cycle".
KernelCharacterizationReport kernel_characterization_h1(const Graph& g, const Orientation& sigma);

/// For connected graphs with b1 = 1: the induced group has order 1 or 2;
/// also reports which of the three sufficient conditions for Z/2 holds.
enum class B1OneCondition { None = 0, ForestEmpty = 1, ForestConnected = 2, AntipodalPair = 3 };

struct B1OneClassification {
    bool z2 = false; // induced group has order 2
    B1OneCondition condition = B1OneCondition::None;
};

B1OneClassification classify_b1_one(const Graph& g);

struct GroupProfile {
    long order = 0;
    bool abelian = false;
    bool cyclic = false;
    std::map<long, long> element_order_histogram;
    std::vector<std::string> generators;
};

GroupProfile group_profile(const PermutationGroup& g);
GroupProfile group_profile(const InducedActionGroup& g);

} // namespace gdr
