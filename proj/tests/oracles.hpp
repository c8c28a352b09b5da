#pragma once

// Independent oracles for the test suites. Everything here avoids the
// Groebner path: membership and kernels are decided degreewise by linear
// algebra over GF(p), which is exact for homogeneous inputs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "virtua/freemod.hpp"

namespace vt_oracle {

using namespace virtua;

inline std::uint32_t brute_inverse(std::uint32_t a, std::uint32_t p) {
    for (std::uint32_t k = 1; k < p; ++k)
        if ((static_cast<std::uint64_t>(a) * k) % p == 1) return k;
    return 0;
}

// multiplication through a plain exponent->coefficient map
inline Poly naive_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    std::map<std::vector<std::int32_t>, std::uint64_t> acc;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms()) {
            std::vector<std::int32_t> e = ta.mon.exps();
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += tb.mon.exp(i);
            acc[e] = (acc[e] + static_cast<std::uint64_t>(ta.coef.value()) *
                                   tb.coef.value()) %
                     p;
        }
    std::vector<Term> ts;
    for (const auto& [e, c] : acc)
        if (c % p)
            ts.push_back(Term{Monomial(e), Scalar(p, static_cast<std::int64_t>(c % p))});
    return Poly::from_terms(std::move(ts), canonical_order());
}

// all monomials of an exact multidegree
inline std::vector<Monomial> monomials_of_degree(const CoxRing& ring,
                                                 const Multidegree& d) {
    std::vector<Monomial> out;
    for (auto c : d.c)
        if (c < 0) return out;
    std::vector<std::int32_t> e(ring.nvars(), 0);
    std::vector<std::int32_t> rem = d.c;
    auto all_zero = [](const std::vector<std::int32_t>& v) {
        for (auto x : v)
            if (x) return false;
        return true;
    };
    std::function<void(int)> rec = [&](int v) {
        if (v == ring.nvars()) {
            if (all_zero(rem)) out.push_back(Monomial(e));
            return;
        }
        const Multidegree& dv = ring.var_degree(v);
        int cap = -1;
        for (int c = 0; c < dv.rank(); ++c)
            if (dv.c[c] > 0) {
                int q = rem[c] / dv.c[c];
                cap = cap < 0 ? q : std::min(cap, q);
            }
        if (cap < 0) cap = 0;  // degree-0 variable contributes nothing
        for (int k = 0; k <= cap; ++k) {
            e[v] = k;
            bool ok = true;
            for (int c = 0; c < dv.rank(); ++c) {
                rem[c] -= k * dv.c[c];
                if (rem[c] < 0) ok = false;
            }
            if (ok) rec(v + 1);
            for (int c = 0; c < dv.rank(); ++c) rem[c] += k * dv.c[c];
        }
        e[v] = 0;
    };
    rec(0);
    return out;
}

// column-span membership: rank(A) == rank(A|b) for every b
class LinearSpan {
public:
    explicit LinearSpan(std::uint32_t p) : p_(p) {}

    // reduce v against the current echelon rows; returns the remainder
    std::vector<std::uint32_t> reduce(std::vector<std::uint32_t> v) const {
        for (const auto& [lead, row] : rows_) {
            if (v[lead] == 0) continue;
            std::uint64_t f = v[lead];
            for (std::size_t i = 0; i < v.size(); ++i)
                v[i] = static_cast<std::uint32_t>(
                    (v[i] + p_ - (f * row[i]) % p_) % p_);
        }
        return v;
    }
    bool contains(const std::vector<std::uint32_t>& v) const {
        for (auto x : reduce(v))
            if (x) return false;
        return true;
    }
    void add(std::vector<std::uint32_t> v) {
        v = reduce(std::move(v));
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i]) {
                std::uint64_t inv = brute_inverse(v[i], p_);
                for (auto& x : v) x = static_cast<std::uint32_t>((x * inv) % p_);
                rows_.emplace_back(i, std::move(v));
                return;
            }
        }
    }
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    std::uint32_t p_;
    std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> rows_;
};

inline std::vector<std::uint32_t> poly_to_vector(const Poly& f,
                                                 const std::vector<Monomial>& basis,
                                                 std::uint32_t p) {
    std::vector<std::uint32_t> v(basis.size(), 0);
    for (const auto& t : f.terms()) {
        bool found = false;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i] == t.mon) {
                v[i] = t.coef.value();
                found = true;
                break;
            }
        if (!found) throw Error("oracle: term outside the degree basis");
    }
    (void)p;
    return v;
}

// exact membership test for homogeneous f in the ideal generated by
// homogeneous gens: f must lie in the span of {m * g} at its own degree
inline bool ideal_membership(const CoxRing& ring, const Poly& f,
                             const std::vector<Poly>& gens) {
    if (f.is_zero()) return true;
    const std::uint32_t p = ring.modulus();
    auto fd = ring.multidegree_of(f);
    if (!fd) throw Error("oracle: inhomogeneous membership query");
    auto basis = monomials_of_degree(ring, *fd);
    LinearSpan span(p);
    for (const Poly& g : gens) {
        if (g.is_zero()) continue;
        auto gd = ring.multidegree_of(g);
        for (const Monomial& m : monomials_of_degree(ring, *fd - *gd))
            span.add(poly_to_vector(term_mul(g, m, Scalar::one(p)), basis, p));
    }
    return span.contains(poly_to_vector(f, basis, p));
}

// ideal equality up to the degrees where either side has generators is not
// decidable degreewise in general, so compare through mutual membership of
// generators plus membership of products when needed
inline bool mutually_contained(const CoxRing& ring, const std::vector<Poly>& a,
                               const std::vector<Poly>& b) {
    for (const Poly& f : a)
        if (!ideal_membership(ring, f, b)) return false;
    for (const Poly& f : b)
        if (!ideal_membership(ring, f, a)) return false;
    return true;
}

// stacked coordinates of a module element over the target twists at degree d
inline std::vector<std::uint32_t> module_vector(
    const CoxRing& ring, const std::vector<Poly>& coords,
    const std::vector<std::vector<Monomial>>& bases, std::uint32_t p) {
    std::vector<std::uint32_t> v;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        auto part = poly_to_vector(coords[i], bases[i], p);
        v.insert(v.end(), part.begin(), part.end());
    }
    (void)ring;
    return v;
}

// The degreewise kernel oracle: at multidegree d, the nullspace of phi must
// coincide with the span of the syzygy columns. Returns true when they agree.
inline bool syzygies_complete_at(const CoxRing& ring, const GradedMatrix& phi,
                                 const GradedMatrix& syz, const Multidegree& d) {
    const std::uint32_t p = ring.modulus();
    // bases of the source and target in degree d
    std::vector<std::vector<Monomial>> src_bases, tgt_bases;
    for (const auto& a : phi.source().twists)
        src_bases.push_back(monomials_of_degree(ring, d - a));
    for (const auto& b : phi.target().twists)
        tgt_bases.push_back(monomials_of_degree(ring, d - b));
    std::size_t src_dim = 0, tgt_dim = 0;
    for (const auto& bs : src_bases) src_dim += bs.size();
    for (const auto& bs : tgt_bases) tgt_dim += bs.size();
    if (src_dim == 0) return true;

    // columns of phi at degree d, as vectors over the source basis -> image
    std::vector<std::vector<std::uint32_t>> domain_vecs;
    std::vector<std::vector<std::uint32_t>> image_vecs;
    const Scalar one = Scalar::one(p);
    for (int j = 0; j < phi.cols(); ++j)
        for (const Monomial& m : src_bases[j]) {
            std::vector<std::uint32_t> dom(src_dim, 0);
            std::size_t off = 0;
            for (int jj = 0; jj < j; ++jj) off += src_bases[jj].size();
            for (std::size_t k = 0; k < src_bases[j].size(); ++k)
                if (src_bases[j][k] == m) dom[off + k] = 1;
            std::vector<Poly> img;
            for (int i = 0; i < phi.rows(); ++i)
                img.push_back(term_mul(phi.entry(i, j), m, one));
            domain_vecs.push_back(std::move(dom));
            image_vecs.push_back(module_vector(ring, img, tgt_bases, p));
        }

    // nullspace via echelon bookkeeping: reduce image vectors, recording the
    // domain combination alongside
    LinearSpan image_span(p);
    std::vector<std::vector<std::uint32_t>> null_vectors;
    std::vector<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> rows;
    for (std::size_t c = 0; c < domain_vecs.size(); ++c) {
        std::vector<std::uint32_t> img = image_vecs[c];
        std::vector<std::uint32_t> dom = domain_vecs[c];
        for (const auto& [img_row, dom_row] : rows) {
            std::size_t lead = 0;
            while (lead < img_row.size() && img_row[lead] == 0) ++lead;
            if (lead == img_row.size() || img[lead] == 0) continue;
            std::uint64_t f = img[lead];
            for (std::size_t i = 0; i < img.size(); ++i)
                img[i] = static_cast<std::uint32_t>((img[i] + p - (f * img_row[i]) % p) % p);
            for (std::size_t i = 0; i < dom.size(); ++i)
                dom[i] = static_cast<std::uint32_t>((dom[i] + p - (f * dom_row[i]) % p) % p);
        }
        bool zero = true;
        for (auto x : img)
            if (x) zero = false;
        if (zero) {
            null_vectors.push_back(dom);
        } else {
            std::size_t lead = 0;
            while (img[lead] == 0) ++lead;
            std::uint64_t inv = brute_inverse(img[lead], p);
            for (auto& x : img) x = static_cast<std::uint32_t>((x * inv) % p);
            for (auto& x : dom) x = static_cast<std::uint32_t>((x * inv) % p);
            rows.emplace_back(std::move(img), std::move(dom));
        }
    }

    // span generated by the syzygy columns at degree d
    LinearSpan syz_span(p);
    for (int k = 0; k < syz.cols(); ++k) {
        for (const Monomial& m : monomials_of_degree(ring, d - syz.source().twists[k])) {
            std::vector<Poly> coords;
            for (int j = 0; j < syz.rows(); ++j)
                coords.push_back(term_mul(syz.entry(j, k), m, one));
            syz_span.add(module_vector(ring, coords, src_bases, p));
        }
    }
    for (const auto& n : null_vectors)
        if (!syz_span.contains(n)) return false;
    return true;
}

// minimum size of a variable subset covering every generator's support; this
// is codim for monomial ideals (their minimal primes are variable-generated)
inline int monomial_cover_codim(const CoxRing& ring, const std::vector<Poly>& gens) {
    std::vector<std::uint32_t> masks;
    for (const Poly& g : gens) masks.push_back(g.lead().mon.support_mask());
    const int n = ring.nvars();
    for (int size = 0; size <= n; ++size) {
        for (std::uint32_t u = 0; u < (1u << n); ++u) {
            if (__builtin_popcount(u) != size) continue;
            bool covers = true;
            for (auto m : masks)
                if ((m & u) == 0) covers = false;
            if (covers) return size;
        }
    }
    return n;
}

}  // namespace vt_oracle
