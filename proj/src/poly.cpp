#include "virtua/poly.hpp"

#include <algorithm>

namespace virtua {

const MonomialOrder& canonical_order() {
    static const MonomialOrder ord = MonomialOrder::grevlex();
    return ord;
}

Poly Poly::from_terms(std::vector<Term> terms, const MonomialOrder& ord) {
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.mon, b.mon); });
    Poly f;
    f.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!f.terms_.empty() && f.terms_.back().mon == t.mon) {
            f.terms_.back().coef = f.terms_.back().coef + t.coef;
            if (f.terms_.back().coef.is_zero()) f.terms_.pop_back();
        } else if (!t.coef.is_zero()) {
            f.terms_.push_back(std::move(t));
        }
    }
    return f;
}

bool Poly::operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].coef == o.terms_[i].coef) || terms_[i].mon != o.terms_[i].mon)
            return false;
    return true;
}

Poly add(const Poly& a, const Poly& b, const MonomialOrder& ord) {
    Poly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        int c = ord.compare(a.terms_[i].mon, b.terms_[j].mon);
        if (c > 0) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(b.terms_[j++]);
        } else {
            Scalar s = a.terms_[i].coef + b.terms_[j].coef;
            if (!s.is_zero()) r.terms_.push_back(Term{a.terms_[i].mon, s});
            ++i;
            ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
    return r;
}

Poly sub(const Poly& a, const Poly& b, const MonomialOrder& ord) {
    return add(a, negated(b), ord);
}

Poly mul(const Poly& a, const Poly& b, const MonomialOrder& ord) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_)
            prod.push_back(Term{ta.mon * tb.mon, ta.coef * tb.coef});
    return Poly::from_terms(std::move(prod), ord);
}

Poly term_mul(const Poly& f, const Monomial& m, const Scalar& c) {
    Poly r;
    if (c.is_zero()) return r;
    r.terms_.reserve(f.terms_.size());
    for (const auto& t : f.terms_) r.terms_.push_back(Term{t.mon * m, t.coef * c});
    return r;
}

Poly scaled(const Poly& f, const Scalar& c) {
    Poly r;
    if (c.is_zero()) return r;
    r.terms_.reserve(f.terms_.size());
    for (const auto& t : f.terms_) r.terms_.push_back(Term{t.mon, t.coef * c});
    return r;
}

Poly negated(const Poly& f) {
    if (f.is_zero()) return f;
    return scaled(f, -Scalar::one(f.lead().coef.modulus()));
}

Poly monic(const Poly& f) {
    if (f.is_zero() || f.lead().coef.is_one()) return f;
    return scaled(f, f.lead().coef.inverse());
}

Poly resorted(const Poly& f, const MonomialOrder& ord) {
    return Poly::from_terms(f.terms_, ord);
}

Poly Poly::operator+(const Poly& o) const { return add(*this, o, canonical_order()); }
Poly Poly::operator-(const Poly& o) const { return sub(*this, o, canonical_order()); }
Poly Poly::operator*(const Poly& o) const { return mul(*this, o, canonical_order()); }
Poly Poly::operator-() const { return negated(*this); }

Poly extend_vars(const Poly& f, int new_nvars) {
    std::vector<Term> ts;
    ts.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        std::vector<std::int32_t> e = t.mon.exps();
        e.resize(new_nvars, 0);
        ts.push_back(Term{Monomial(std::move(e)), t.coef});
    }
    return Poly::from_terms(std::move(ts), canonical_order());
}

Poly contract_vars(const Poly& f, int new_nvars) {
    std::vector<Term> ts;
    ts.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        std::vector<std::int32_t> e = t.mon.exps();
        for (size_t i = new_nvars; i < e.size(); ++i)
            if (e[i] != 0) throw Error("contract_vars: eliminated variable still present");
        e.resize(new_nvars);
        ts.push_back(Term{Monomial(std::move(e)), t.coef});
    }
    return Poly::from_terms(std::move(ts), canonical_order());
}

}  // namespace virtua
