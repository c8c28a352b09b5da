#pragma once

#include <optional>
#include <utility>

#include "virtua/freemod.hpp"

namespace virtua {

// Per-differential record of the two main-theorem conditions.
struct IndexReport {
    int index;                 // i, 1-based
    int rank_phi;              // rank(phi_i)
    int rank_phi_next;         // rank(phi_{i+1}), 0 past the end
    int rank_module;           // rank(F_i)
    bool condition_a;          // rank(phi_i) + rank(phi_{i+1}) = rank(F_i)
    Ideal minors;              // I(phi_i)
    Ideal saturation;          // I(phi_i) : B^infinity
    ExtInt depth_unsaturated;
    ExtInt depth_saturated;
    bool condition_b;          // depth_saturated >= i
};

struct VirtualityReport {
    std::vector<IndexReport> records;
    bool verdict_theorem = true;
    std::optional<bool> verdict_oracle;
    // whether the classical exactness criterion already holds with the
    // unsaturated depths
    bool exactness_note = true;
    std::uint64_t seed = kDefaultSeed;
};

// Witness that H_i is B-torsion: every generator of B lies in the radical of
// Fitt_0 of a presentation of H_i, recorded per component variable as well.
struct TorsionCertificate {
    int index;
    Ideal fitt0;
    bool homology_zero;
    // one entry per component of B: (variable index, variable in rad(Fitt_0))
    std::vector<std::vector<std::pair<int, bool>>> component_witnesses;
    bool torsion;
};

// Decide virtuality through the rank + saturated-depth criterion.
VirtualityReport check_virtual(const FreeComplex& F, const IrrelevantIdeal& B,
                               std::uint64_t seed = kDefaultSeed);

// Independent oracle from the definition: every higher homology module is
// B-torsion.
std::pair<bool, std::vector<TorsionCertificate>> oracle_is_virtual(
    const FreeComplex& F, const IrrelevantIdeal& B, std::uint64_t seed = kDefaultSeed);

// Two-term criterion for F -> G -> H with both maximal-minor ideals
// saturating to the unit ideal: virtual iff rank(phi) + rank(psi) = rank(G).
bool check_two_term(const GradedMatrix& phi, const GradedMatrix& psi,
                    const IrrelevantIdeal& B, std::uint64_t seed = kDefaultSeed);

// Over P^n with length <= n+1, a virtual complex is exact; returns the truth
// of that implication for this instance.
bool check_pn_collapse(const FreeComplex& F, std::uint64_t seed = kDefaultSeed);

Ideal fitt0_of(const Presentation& P);
bool coker_is_zero(const Presentation& P);

}  // namespace virtua
