#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "virtua/coxring.hpp"
#include "virtua/extint.hpp"
#include "virtua/kernels.hpp"

namespace virtua {

// Reduced Groebner basis: monic elements, no leading term divisible by
// another's, tails fully reduced, sorted ascending by leading monomial.
// Unique per ideal and order, so it doubles as a canonical form.
struct GroebnerBasis {
    std::vector<Poly> elems;
    MonomialOrder order;

    bool is_unit() const { return elems.size() == 1 && elems[0].is_unit(); }
    bool is_zero() const { return elems.empty(); }
};

// full reduction: no term of the result is divisible by any basis lead
Poly reduce_full(const Poly& f, std::span<const Poly> basis, const MonomialOrder& ord);

Poly s_poly(const Poly& f, const Poly& g, const MonomialOrder& ord);

// Buchberger with Gebauer-Moller pair elimination and degree-batched normal
// selection; S-polynomial reduction within a batch runs through the kernel.
GroebnerBasis groebner_basis(std::span<const Poly> gens, const MonomialOrder& ord,
                             ExecMode mode = default_exec_mode());

Poly normal_form(const Poly& f, const GroebnerBasis& gb);

// Finitely generated homogeneous ideal. Equality, membership and unit tests
// go through the cached reduced Groebner basis under the canonical order.
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<Poly> gens, bool require_homogeneous = true);

    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
    static Ideal unit(RingPtr ring);
    // ideal generated by a subset of the variables
    static Ideal span_of_vars(RingPtr ring, const std::vector<int>& vars);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Poly>& gens() const { return gens_; }

    const GroebnerBasis& reduced_gb() const;

    bool contains(const Poly& f) const;
    bool contains(const Ideal& other) const;
    bool is_unit() const { return reduced_gb().is_unit(); }
    bool is_zero() const { return reduced_gb().is_zero(); }

    bool operator==(const Ideal& o) const;
    bool operator!=(const Ideal& o) const { return !(*this == o); }

private:
    struct Cache {
        std::mutex mu;
        std::shared_ptr<const GroebnerBasis> gb;
    };

    RingPtr ring_;
    std::vector<Poly> gens_;
    std::shared_ptr<Cache> cache_;
};

// {s : sJ ⊆ I}, via intersections with principal colons. J = <0> yields <1>
// and sets *zero_warning when provided.
Ideal ideal_quotient(const Ideal& I, const Ideal& J, bool* zero_warning = nullptr);
Ideal quotient_by_poly(const Ideal& I, const Poly& f);

// I : J^∞ as the stabilized iterated quotient
Ideal saturate(const Ideal& I, const Ideal& J);

// chained saturation over the prime components of B
Ideal saturate_by_irrelevant(const Ideal& I, const IrrelevantIdeal& B);

// intersection via elimination of an auxiliary scalar t from tI + (1-t)J
Ideal intersect(const Ideal& I, const Ideal& J);

// f ∈ √I, by Rabinowitsch: 1 ∈ I + <1 - t f> in the t-extended ring
bool radical_membership(const Poly& f, const Ideal& I);

// n - dim(S/I); dimension from maximal independent variable sets of the
// initial ideal; the unit ideal has infinite codimension
ExtInt codim(const Ideal& I);

// depth of I on S; equals codim because S is Cohen-Macaulay
ExtInt grade(const Ideal& I);

// one prime component of B as an ideal
Ideal component_ideal(const RingPtr& ring, const std::vector<int>& vars);
// B itself: the intersection of its components
Ideal materialize_irrelevant(const RingPtr& ring, const IrrelevantIdeal& B);

}  // namespace virtua
