#pragma once

// Randomized complex families for the equivalence suites: Koszul and Taylor
// complexes of small monomial ideals, twisted, summed, truncated, and with
// zeroed differentials. Every generated chain is a genuine complex.

#include <random>

#include "helpers.hpp"

namespace vt {

struct ComplexGen {
    std::mt19937_64 rng;
    explicit ComplexGen(std::uint64_t seed) : rng(seed) {}

    Monomial random_monomial(const CoxRing& ring, int max_exp = 2) {
        for (;;) {
            std::vector<std::int32_t> e(ring.nvars(), 0);
            for (int v = 0; v < ring.nvars(); ++v)
                e[v] = static_cast<std::int32_t>(rng() % (max_exp + 1));
            Monomial m{e};
            if (!m.is_one()) return m;
        }
    }

    std::vector<Monomial> random_monomials(const CoxRing& ring, int count) {
        std::vector<Monomial> ms;
        for (int i = 0; i < count; ++i) ms.push_back(random_monomial(ring));
        return ms;
    }

    FreeComplex twist(const FreeComplex& F, const Multidegree& d) {
        FreeComplex out;
        for (const auto& m : F.modules) {
            std::vector<Multidegree> tw;
            for (const auto& t : m.twists) tw.push_back(t + d);
            out.modules.push_back(FreeModule{m.ring, std::move(tw)});
        }
        for (int i = 0; i < F.length(); ++i)
            out.maps.push_back(GradedMatrix(out.modules[i + 1], out.modules[i],
                                            F.maps[i].entries()));
        return out;
    }

    FreeComplex direct_sum(const FreeComplex& A, const FreeComplex& B) {
        FreeComplex out;
        std::size_t len = std::max(A.modules.size(), B.modules.size());
        for (std::size_t i = 0; i < len; ++i) {
            std::vector<Multidegree> tw;
            if (i < A.modules.size())
                tw.insert(tw.end(), A.modules[i].twists.begin(), A.modules[i].twists.end());
            if (i < B.modules.size())
                tw.insert(tw.end(), B.modules[i].twists.begin(), B.modules[i].twists.end());
            out.modules.push_back(FreeModule{A.ring(), std::move(tw)});
        }
        for (std::size_t i = 0; i + 1 < len; ++i) {
            int ra = i < A.modules.size() ? A.modules[i].rank() : 0;
            int ca = i + 1 < A.modules.size() ? A.modules[i + 1].rank() : 0;
            int rb = i < B.modules.size() ? B.modules[i].rank() : 0;
            int cb = i + 1 < B.modules.size() ? B.modules[i + 1].rank() : 0;
            std::vector<std::vector<Poly>> e(ra + rb, std::vector<Poly>(ca + cb));
            for (int r = 0; r < ra; ++r)
                for (int c = 0; c < ca; ++c) e[r][c] = A.maps[i].entry(r, c);
            for (int r = 0; r < rb; ++r)
                for (int c = 0; c < cb; ++c) e[ra + r][ca + c] = B.maps[i].entry(r, c);
            out.maps.push_back(GradedMatrix(out.modules[i + 1], out.modules[i], std::move(e)));
        }
        while (!out.maps.empty() && out.modules.back().rank() == 0) {
            out.maps.pop_back();
            out.modules.pop_back();
        }
        return out;
    }

    FreeComplex truncate(const FreeComplex& F, int len) {
        FreeComplex out;
        out.modules.assign(F.modules.begin(), F.modules.begin() + len + 1);
        out.maps.assign(F.maps.begin(), F.maps.begin() + len);
        return out;
    }

    FreeComplex zero_map(const FreeComplex& F, int idx) {
        FreeComplex out = F;
        out.maps[idx] = GradedMatrix::zero(F.modules[idx + 1], F.modules[idx]);
        return out;
    }

    // one random complex over the given ring
    FreeComplex next(const RingPtr& ring, int max_gens = 4) {
        int ngens = 1 + static_cast<int>(rng() % max_gens);
        auto ms = random_monomials(*ring, ngens);
        FreeComplex F;
        if (rng() % 2) {
            F = taylor_complex(ring, ms);
        } else {
            std::vector<Poly> fs;
            for (const auto& m : ms)
                fs.push_back(Poly::term(Term{m, Scalar::one(ring->modulus())}));
            F = koszul_complex(ring, fs);
        }
        if (rng() % 3 == 0) {
            std::vector<std::int32_t> d(ring->pic_rank());
            for (auto& x : d) x = static_cast<std::int32_t>(rng() % 3) - 1;
            F = twist(F, Multidegree(d));
        }
        if (rng() % 4 == 0 && F.length() >= 2)
            F = truncate(F, 1 + static_cast<int>(rng() % (F.length() - 1)));
        if (rng() % 4 == 0) F = zero_map(F, static_cast<int>(rng() % F.length()));
        if (rng() % 5 == 0) {
            auto ms2 = random_monomials(*ring, 1 + static_cast<int>(rng() % 2));
            F = direct_sum(F, taylor_complex(ring, ms2));
        }
        return F;
    }
};

}  // namespace vt
