#pragma once

#include <array>

#include "gdr/cochain.hpp"
#include "gdr/graph.hpp"
#include "gdr/matrix.hpp"

namespace gdr {

/// The five maps of the cohomology sequence for a cover Γ = A ∪ B, in the
/// fixed harmonic bases:
///   0 → H0(Γ) → H0(A)⊕H0(B) → H0(A∩B) → H1(Γ) → H1(A)⊕H1(B) → H1(A∩B) → 0
struct MVSequence {
    std::array<int, 6> dims{}; // node dimensions, left to right
    RationalMatrix restrict0;  // k* ⊕ l*, degree 0
    RationalMatrix diff0;      // i* - j*, degree 0
    RationalMatrix delta;      // connecting homomorphism
    RationalMatrix restrict1;  // k* ⊕ l*, degree 1
    RationalMatrix diff1;      // i* - j*, degree 1
};

/// How the zigzag lifts a class of H0(A∩B) into Omega^0(A) ⊕ Omega^0(B).
/// The class of the glued coboundary is lift-independent; exposing a second
/// lift lets tests check that instead of assuming it.
enum class DeltaLift {
    ZeroExtension,     // f extended by zero on A, zero on B
    ComponentConstant, // extended by 1 on the rest of each A-component meeting supp(f)
};

MVSequence build_mv_sequence(const Graph& g, const Orientation& sigma, const Subgraph& a,
                             const Subgraph& b, DeltaLift lift = DeltaLift::ZeroExtension);

RationalMatrix connecting_map(const Graph& g, const Orientation& sigma, const Subgraph& a,
                              const Subgraph& b, DeltaLift lift = DeltaLift::ZeroExtension);

/// Exactness of 0 → Omega^p(Γ) → Omega^p(A)⊕Omega^p(B) → Omega^p(A∩B) → 0
/// for p = 0 and p = 1.
struct ShortSequenceCertificate {
    std::array<bool, 2> injective{};
    std::array<bool, 2> exact_middle{};
    std::array<bool, 2> surjective{};
    bool ok() const {
        for (int p = 0; p < 2; ++p)
            if (!injective[p] || !exact_middle[p] || !surjective[p]) return false;
        return true;
    }
};

ShortSequenceCertificate short_sequence_check(const Graph& g, const Orientation& sigma,
                                              const Subgraph& a, const Subgraph& b);

struct LongSequenceCertificate {
    std::array<int, 6> dims{};
    std::array<bool, 4> chain_zero{}; // consecutive composites vanish
    std::array<bool, 4> exact{};      // im = ker at the four interior nodes
    bool left_injective = false;
    bool right_surjective = false;
    bool alternating_sum_zero = false;
    bool ok() const {
        for (int i = 0; i < 4; ++i)
            if (!chain_zero[i] || !exact[i]) return false;
        return left_injective && right_surjective && alternating_sum_zero;
    }
};

LongSequenceCertificate long_sequence_check(const Graph& g, const Orientation& sigma,
                                            const Subgraph& a, const Subgraph& b);

} // namespace gdr
