#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"

#ifdef VIRTUA_HAVE_OPENMP
#include <omp.h>
#endif

using namespace vt;

namespace {

// independent cofactor-expansion determinant for the kernel oracle
Poly naive_det(const std::vector<std::vector<Poly>>& m, std::vector<int> rows,
               std::vector<int> cols) {
    const std::uint32_t p = 101;
    if (rows.size() == 1) return m[rows[0]][cols[0]];
    Poly acc;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const Poly& e = m[rows[r]][cols[0]];
        if (e.is_zero()) continue;
        std::vector<int> rr = rows;
        rr.erase(rr.begin() + r);
        std::vector<int> cc(cols.begin() + 1, cols.end());
        Poly sub = vt_oracle::naive_mul(e, naive_det(m, rr, cc), p);
        acc = (r % 2 == 0) ? acc + sub : acc - sub;
    }
    return acc;
}

std::vector<Poly> random_polys(const RingPtr& r, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Poly> out;
    auto mons2 = vt_oracle::monomials_of_degree(*r, md({1, 1}));
    auto mons3 = vt_oracle::monomials_of_degree(*r, md({2, 1}));
    for (int i = 0; i < count; ++i) {
        std::vector<Term> ts;
        for (const auto& m : (i % 2 ? mons2 : mons3))
            if (rng() % 2)
                ts.push_back(Term{m, Scalar(101, static_cast<std::int64_t>(1 + rng() % 100))});
        out.push_back(Poly::from_terms(std::move(ts), canonical_order()));
    }
    return out;
}

}  // namespace

TEST_CASE("normal-form batch: serial and parallel agree") {
    auto r = p1p1();
    Ideal I = ideal_of(r, {"x0*y0-x1*y1", "x0^2*y1", "x1^2*y0"});
    const auto& gb = I.reduced_gb();
    auto batch = random_polys(r, 24, 99);
    auto serial = normal_form_batch(batch, gb.elems, gb.order, ExecMode::Serial);
    auto parallel = normal_form_batch(batch, gb.elems, gb.order, ExecMode::Parallel);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i] == parallel[i]);
}

TEST_CASE("minor batch: serial and parallel agree, and match cofactor expansion") {
    auto r = p1p1();
    GradedMatrix m = matrix_of(
        r, {md({0, 0}), md({0, 0}), md({0, 0})},
        {md({1, 1}), md({1, 1}), md({1, 1})},
        {{"x0*y0", "x1*y0", "x0*y1"},
         {"x1*y1", "x0*y0+x1*y0", "0"},
         {"x0*y1-x1*y0", "x1*y1", "x0*y0"}});
    std::vector<MinorSpec> specs;
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = c + 1; d < 3; ++d)
                    specs.push_back({{a, b}, {c, d}});
    specs.push_back({{0, 1, 2}, {0, 1, 2}});
    auto serial = minor_batch(m.entries(), specs, canonical_order(), ExecMode::Serial);
    auto parallel = minor_batch(m.entries(), specs, canonical_order(), ExecMode::Parallel);
    REQUIRE(serial.size() == specs.size());
    for (std::size_t i = 0; i < specs.size(); ++i) {
        CHECK(serial[i] == parallel[i]);
        CHECK(serial[i] == naive_det(m.entries(), specs[i].first, specs[i].second));
    }
}

TEST_CASE("groebner bases are identical on both execution paths") {
    auto r = p1p2();
    std::vector<std::vector<std::string>> fixtures = {
        {"x0*y1-x1*y0", "x0*y0"},
        {"x0*y0", "x0*y1", "x0*y2", "x1*y0^2"},
        {"y0*y1-22*y1^2-20*y0*y2-26*y1*y2-6*y2^2", "x0*y1+10*x0*y2-x1*y0-19*x1*y1+47*x1*y2"},
    };
    for (const auto& gens : fixtures) {
        std::vector<Poly> ps;
        for (const auto& s : gens) ps.push_back(P(r, s));
        auto a = groebner_basis(ps, canonical_order(), ExecMode::Serial);
        auto b = groebner_basis(ps, canonical_order(), ExecMode::Parallel);
        REQUIRE(a.elems.size() == b.elems.size());
        for (std::size_t i = 0; i < a.elems.size(); ++i) CHECK(a.elems[i] == b.elems[i]);
    }
}

#ifdef VIRTUA_HAVE_OPENMP
TEST_CASE("results do not depend on the thread count") {
    auto r = p1p2();
    std::vector<Poly> gens = {P(r, "x0*y0"), P(r, "x0*y1"), P(r, "x0*y2"),
                              P(r, "x0*y1-x1*y0")};
    int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    auto a = groebner_basis(gens, canonical_order(), ExecMode::Parallel);
    omp_set_num_threads(2);
    auto b = groebner_basis(gens, canonical_order(), ExecMode::Parallel);
    omp_set_num_threads(saved);
    REQUIRE(a.elems.size() == b.elems.size());
    for (std::size_t i = 0; i < a.elems.size(); ++i) CHECK(a.elems[i] == b.elems[i]);
}
#endif
