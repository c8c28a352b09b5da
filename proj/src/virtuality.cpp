#include "virtua/virtuality.hpp"

namespace virtua {

Ideal fitt0_of(const Presentation& P) {
    return minors_ideal(P.matrix.target().rank(), P.matrix);
}

bool coker_is_zero(const Presentation& P) { return fitt0_of(P).is_unit(); }

VirtualityReport check_virtual(const FreeComplex& F, const IrrelevantIdeal& B,
                               std::uint64_t seed) {
    validate_complex(F);
    const int n = F.length();
    VirtualityReport report;
    report.seed = seed;

    std::vector<int> ranks(n + 2, 0);
    for (int i = 1; i <= n; ++i) ranks[i] = rank_of(F.maps[i - 1], seed);

    for (int i = 1; i <= n; ++i) {
        Ideal minors = minors_ideal(ranks[i], F.maps[i - 1]);
        Ideal sat = saturate_by_irrelevant(minors, B);
        ExtInt du = grade(minors);
        ExtInt ds = grade(sat);
        bool cond_a = ranks[i] + ranks[i + 1] == F.modules[i].rank();
        bool cond_b = ds >= i;
        report.verdict_theorem = report.verdict_theorem && cond_a && cond_b;
        report.exactness_note = report.exactness_note && cond_a && (du >= i);
        report.records.push_back(IndexReport{i, ranks[i], ranks[i + 1],
                                             F.modules[i].rank(), cond_a, minors, sat,
                                             du, ds, cond_b});
    }
    return report;
}

std::pair<bool, std::vector<TorsionCertificate>> oracle_is_virtual(
    const FreeComplex& F, const IrrelevantIdeal& B, std::uint64_t seed) {
    (void)seed;
    validate_complex(F);
    const RingPtr& ring = F.ring();
    const int n = F.length();

    // B itself; for disjoint variable blocks its generators are the products
    // of one variable per component
    Ideal b_ideal = materialize_irrelevant(ring, B);

    bool verdict = true;
    std::vector<TorsionCertificate> certs;
    for (int i = 1; i <= n; ++i) {
        Presentation P = homology_presentation(F, i);
        Ideal fitt0 = fitt0_of(P);
        bool hzero = fitt0.is_unit();
        bool torsion = true;
        if (!hzero) {
            for (const Poly& g : b_ideal.gens())
                if (!radical_membership(g, fitt0)) {
                    torsion = false;
                    break;
                }
        }
        std::vector<std::vector<std::pair<int, bool>>> witnesses;
        for (const auto& comp : B.components) {
            std::vector<std::pair<int, bool>> w;
            for (int v : comp) {
                bool in_rad =
                    hzero ||
                    radical_membership(
                        Poly::term(Term{Monomial::variable(ring->nvars(), v),
                                        Scalar::one(ring->modulus())}),
                        fitt0);
                w.emplace_back(v, in_rad);
            }
            witnesses.push_back(std::move(w));
        }
        verdict = verdict && torsion;
        certs.push_back(TorsionCertificate{i, fitt0, hzero, std::move(witnesses), torsion});
    }
    return {verdict, std::move(certs)};
}

bool check_two_term(const GradedMatrix& phi, const GradedMatrix& psi,
                    const IrrelevantIdeal& B, std::uint64_t seed) {
    check_same_ring(phi.ring(), psi.ring());
    if (!phi.target().same_twists(psi.source()))
        throw InputError("two-term check: target(phi) must equal source(psi)");
    int rank_phi = rank_of(phi, seed);
    int rank_psi = rank_of(psi, seed);
    Ideal sat_phi = saturate_by_irrelevant(minors_ideal(rank_phi, phi), B);
    if (!sat_phi.is_unit())
        throw PreconditionError("I(phi) does not saturate to the unit ideal");
    Ideal sat_psi = saturate_by_irrelevant(minors_ideal(rank_psi, psi), B);
    if (!sat_psi.is_unit())
        throw PreconditionError("I(psi) does not saturate to the unit ideal");
    return rank_phi + rank_psi == psi.source().rank();
}

bool check_pn_collapse(const FreeComplex& F, std::uint64_t seed) {
    validate_complex(F);
    const RingPtr& ring = F.ring();
    if (ring->blocks().size() != 1)
        throw InputError("collapse check needs the Cox ring of a single projective space");
    if (F.length() > ring->dim_x() + 1)
        throw InputError("collapse check needs length at most dim + 1");
    IrrelevantIdeal B = irrelevant_components(*ring);
    if (!check_virtual(F, B, seed).verdict_theorem) return true;
    for (int i = 1; i <= F.length(); ++i)
        if (!coker_is_zero(homology_presentation(F, i))) return false;
    return true;
}

}  // namespace virtua
