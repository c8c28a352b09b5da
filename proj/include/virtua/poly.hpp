#pragma once

#include <vector>

#include "virtua/monomial.hpp"
#include "virtua/scalar.hpp"

namespace virtua {

struct Term {
    Monomial mon;
    Scalar coef;
};

// Sparse multivariate polynomial: terms kept strictly decreasing under the
// monomial order the value was built with (grevlex unless stated otherwise).
// No zero coefficients are stored; zero is the empty term list.
class Poly {
public:
    Poly() = default;

    static Poly from_terms(std::vector<Term> terms, const MonomialOrder& ord);
    // trusted: terms already strictly decreasing under the operating order,
    // no zero coefficients
    static Poly from_sorted(std::vector<Term> terms) {
        Poly f;
        f.terms_ = std::move(terms);
        return f;
    }
    static Poly term(Term t) {
        Poly f;
        if (!t.coef.is_zero()) f.terms_.push_back(std::move(t));
        return f;
    }
    static Poly constant(int nvars, const Scalar& c) {
        return term(Term{Monomial::one(nvars), c});
    }

    bool is_zero() const { return terms_.empty(); }
    int nterms() const { return static_cast<int>(terms_.size()); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& lead() const { return terms_.front(); }
    int nvars() const { return terms_.empty() ? 0 : terms_.front().mon.nvars(); }

    bool is_constant() const { return terms_.size() == 1 && terms_[0].mon.is_one(); }
    // nonzero constant, i.e. a unit of the polynomial ring
    bool is_unit() const { return is_constant(); }

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // canonical (grevlex) arithmetic
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;

private:
    friend Poly add(const Poly&, const Poly&, const MonomialOrder&);
    friend Poly mul(const Poly&, const Poly&, const MonomialOrder&);
    friend Poly term_mul(const Poly&, const Monomial&, const Scalar&);
    friend Poly scaled(const Poly&, const Scalar&);
    friend Poly resorted(const Poly&, const MonomialOrder&);

    std::vector<Term> terms_;
};

const MonomialOrder& canonical_order();

Poly add(const Poly& a, const Poly& b, const MonomialOrder& ord);
Poly sub(const Poly& a, const Poly& b, const MonomialOrder& ord);
Poly mul(const Poly& a, const Poly& b, const MonomialOrder& ord);
// c * m * f; stays sorted under any multiplicative order
Poly term_mul(const Poly& f, const Monomial& m, const Scalar& c);
Poly scaled(const Poly& f, const Scalar& c);
Poly negated(const Poly& f);
// divide by the leading coefficient
Poly monic(const Poly& f);
Poly resorted(const Poly& f, const MonomialOrder& ord);

// pad exponent vectors with trailing zeros (auxiliary elimination variables)
Poly extend_vars(const Poly& f, int new_nvars);
// drop trailing variables; they must not occur in f
Poly contract_vars(const Poly& f, int new_nvars);

}  // namespace virtua
