#pragma once

#include <vector>

#include "virtua/kernels.hpp"
#include "virtua/poly.hpp"

namespace virtua {

// term c * x^e * e_pos of an element of a free module S^r
struct ModTerm {
    Monomial mon;
    int pos;
    Scalar coef;
};

// position-over-term order: e_0 > e_1 > ...; ties decided by ord
inline int mod_compare(const MonomialOrder& ord, const Monomial& am, int ap,
                       const Monomial& bm, int bp) {
    if (ap != bp) return ap < bp ? 1 : -1;
    return ord.compare(am, bm);
}

// element of a free module, terms strictly decreasing under POT
class ModPoly {
public:
    ModPoly() = default;

    static ModPoly from_terms(std::vector<ModTerm> terms, const MonomialOrder& ord);
    static ModPoly from_sorted(std::vector<ModTerm> terms) {
        ModPoly f;
        f.terms_ = std::move(terms);
        return f;
    }
    static ModPoly basis_vector(int nvars, int pos, const Scalar& c) {
        ModPoly f;
        if (!c.is_zero()) f.terms_.push_back(ModTerm{Monomial::one(nvars), pos, c});
        return f;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::vector<ModTerm>& terms() const { return terms_; }
    const ModTerm& lead() const { return terms_.front(); }

    // the coordinate in position pos, as a polynomial under ord
    Poly coordinate(int pos, const MonomialOrder& ord) const;

    bool operator==(const ModPoly& o) const;

private:
    std::vector<ModTerm> terms_;
};

ModPoly mod_add(const ModPoly& a, const ModPoly& b, const MonomialOrder& ord);
ModPoly mod_sub(const ModPoly& a, const ModPoly& b, const MonomialOrder& ord);
ModPoly mod_term_mul(const ModPoly& f, const Monomial& m, const Scalar& c);
ModPoly mod_scaled(const ModPoly& f, const Scalar& c);
ModPoly mod_monic(const ModPoly& f);

// Tracked module Groebner data for the span of a list of columns. track[k]
// expresses gb[k] as a combination of the original columns; syzygies are the
// combinations collected from zero reductions (plus unit vectors for zero
// columns) and generate the full kernel.
struct ModGbResult {
    std::vector<ModPoly> gb;
    std::vector<ModPoly> track;  // coordinates in S^{#columns}
    std::vector<ModPoly> syzygies;
    int source_rank = 0;
};

// nvars and p are needed to form unit-vector syzygies for zero columns
ModGbResult module_buchberger(const std::vector<ModPoly>& columns, int nvars,
                              std::uint32_t p, const MonomialOrder& ord,
                              ExecMode mode = default_exec_mode());

// full division of f by the module GB; returns per-element quotients
struct ModDivision {
    std::vector<Poly> quotients;
    ModPoly remainder;
};
ModDivision mod_divide(const ModPoly& f, const std::vector<ModPoly>& gb,
                       const MonomialOrder& ord);

// Minimal generating subset of a homogeneous generating set, by graded
// Nakayama: scan in ascending module degree, keeping a generator only when it
// lies outside the span of the ones already kept. weights[pos] is the total
// twist degree sitting over that position.
std::vector<ModPoly> minimal_generators(const std::vector<ModPoly>& gens,
                                        const std::vector<std::int64_t>& weights,
                                        const MonomialOrder& ord);

}  // namespace virtua
