#pragma once

// shared construction shortcuts for the test suites

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "virtua/io.hpp"

namespace vt {

using namespace virtua;

inline RingPtr p1() { return CoxRing::product_space({1}, 101); }
inline RingPtr p2() { return CoxRing::product_space({2}, 101); }
inline RingPtr p1p1() { return CoxRing::product_space({1, 1}, 101); }
inline RingPtr p1p2() { return CoxRing::product_space({1, 2}, 101); }

inline Poly P(const RingPtr& r, const std::string& s) { return parse_poly(*r, s); }

inline Ideal ideal_of(const RingPtr& r, std::initializer_list<std::string> gens) {
    std::vector<Poly> ps;
    for (const auto& s : gens) ps.push_back(P(r, s));
    return Ideal(r, std::move(ps));
}

inline Multidegree md(std::initializer_list<std::int32_t> c) {
    return Multidegree(std::vector<std::int32_t>(c));
}

inline FreeModule mod_of(const RingPtr& r, std::vector<Multidegree> twists) {
    return FreeModule{r, std::move(twists)};
}

inline GradedMatrix matrix_of(const RingPtr& r, std::vector<Multidegree> target,
                              std::vector<Multidegree> source,
                              std::vector<std::vector<std::string>> rows) {
    std::vector<std::vector<Poly>> entries;
    for (const auto& row : rows) {
        std::vector<Poly> er;
        for (const auto& s : row) er.push_back(s == "0" ? Poly{} : P(r, s));
        entries.push_back(std::move(er));
    }
    return GradedMatrix(mod_of(r, std::move(source)), mod_of(r, std::move(target)),
                        std::move(entries));
}

inline bool same_multiset(std::vector<Multidegree> a, std::vector<Multidegree> b) {
    auto less = [](const Multidegree& x, const Multidegree& y) { return x.c < y.c; };
    std::sort(a.begin(), a.end(), less);
    std::sort(b.begin(), b.end(), less);
    return a == b;
}

inline std::vector<int> betti_ranks(const FreeComplex& F) {
    std::vector<int> out;
    for (const auto& m : F.modules) out.push_back(m.rank());
    return out;
}

// Koszul complex on homogeneous elements f_1..f_k: summands indexed by
// subsets, differential by signed deletion.
inline FreeComplex koszul_complex(const RingPtr& ring, const std::vector<Poly>& fs) {
    const int k = static_cast<int>(fs.size());
    std::vector<Multidegree> fdeg;
    for (const auto& f : fs) fdeg.push_back(*ring->multidegree_of(f));

    std::vector<std::vector<std::vector<int>>> subsets(k + 1);
    for (int mask = 0; mask < (1 << k); ++mask) {
        std::vector<int> s;
        for (int b = 0; b < k; ++b)
            if (mask & (1 << b)) s.push_back(b);
        subsets[s.size()].push_back(std::move(s));
    }
    FreeComplex F;
    for (int sz = 0; sz <= k; ++sz) {
        std::vector<Multidegree> tw;
        for (const auto& s : subsets[sz]) {
            Multidegree d = Multidegree::zero(ring->pic_rank());
            for (int t : s) d = d + fdeg[t];
            tw.push_back(d);
        }
        F.modules.push_back(FreeModule{ring, std::move(tw)});
    }
    for (int sz = 1; sz <= k; ++sz) {
        std::vector<std::vector<Poly>> entries(
            subsets[sz - 1].size(), std::vector<Poly>(subsets[sz].size()));
        for (std::size_t j = 0; j < subsets[sz].size(); ++j) {
            const auto& s = subsets[sz][j];
            for (std::size_t r = 0; r < s.size(); ++r) {
                std::vector<int> del = s;
                del.erase(del.begin() + r);
                auto it = std::find(subsets[sz - 1].begin(), subsets[sz - 1].end(), del);
                std::size_t i = it - subsets[sz - 1].begin();
                Poly v = fs[s[r]];
                entries[i][j] = (r % 2 == 0) ? v : negated(v);
            }
        }
        F.maps.push_back(
            GradedMatrix(F.modules[sz], F.modules[sz - 1], std::move(entries)));
    }
    return F;
}

// Taylor complex of monomials m_1..m_k (always a resolution of S/<m_i>).
inline FreeComplex taylor_complex(const RingPtr& ring, const std::vector<Monomial>& ms) {
    const int k = static_cast<int>(ms.size());
    const std::uint32_t p = ring->modulus();
    std::vector<std::vector<std::vector<int>>> subsets(k + 1);
    for (int mask = 0; mask < (1 << k); ++mask) {
        std::vector<int> s;
        for (int b = 0; b < k; ++b)
            if (mask & (1 << b)) s.push_back(b);
        subsets[s.size()].push_back(std::move(s));
    }
    auto lcm_of = [&](const std::vector<int>& s) {
        Monomial l = Monomial::one(ring->nvars());
        for (int t : s) l = lcm(l, ms[t]);
        return l;
    };
    FreeComplex F;
    for (int sz = 0; sz <= k; ++sz) {
        std::vector<Multidegree> tw;
        for (const auto& s : subsets[sz]) tw.push_back(ring->degree_of(lcm_of(s)));
        F.modules.push_back(FreeModule{ring, std::move(tw)});
    }
    for (int sz = 1; sz <= k; ++sz) {
        std::vector<std::vector<Poly>> entries(
            subsets[sz - 1].size(), std::vector<Poly>(subsets[sz].size()));
        for (std::size_t j = 0; j < subsets[sz].size(); ++j) {
            const auto& s = subsets[sz][j];
            Monomial ls = lcm_of(s);
            for (std::size_t r = 0; r < s.size(); ++r) {
                std::vector<int> del = s;
                del.erase(del.begin() + r);
                auto it = std::find(subsets[sz - 1].begin(), subsets[sz - 1].end(), del);
                std::size_t i = it - subsets[sz - 1].begin();
                Monomial q = lcm_of(del).divide(ls);
                Poly v = Poly::term(Term{q, Scalar::one(p)});
                entries[i][j] = (r % 2 == 0) ? v : negated(v);
            }
        }
        F.maps.push_back(
            GradedMatrix(F.modules[sz], F.modules[sz - 1], std::move(entries)));
    }
    return F;
}

}  // namespace vt
