#include "virtua/freemod.hpp"

#include <algorithm>
#include <random>

#include "virtua/limits.hpp"

namespace virtua {

namespace {

std::string deg_str(const Multidegree& d) { return d.str(); }

bool poly_less_canonical(const Poly& a, const Poly& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    const MonomialOrder& ord = canonical_order();
    for (std::size_t k = 0; k < ta.size() && k < tb.size(); ++k) {
        int c = ord.compare(ta[k].mon, tb[k].mon);
        if (c != 0) return c < 0;
        if (ta[k].coef.value() != tb[k].coef.value())
            return ta[k].coef.value() < tb[k].coef.value();
    }
    return ta.size() < tb.size();
}

}  // namespace

GradedMatrix::GradedMatrix(FreeModule source, FreeModule target,
                           std::vector<std::vector<Poly>> entries)
    : source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)) {
    check_same_ring(source_.ring, target_.ring);
    if (static_cast<int>(entries_.size()) != target_.rank())
        throw InputError("matrix has " + std::to_string(entries_.size()) + " rows, expected " +
                         std::to_string(target_.rank()));
    const auto& ring = *source_.ring;
    for (int i = 0; i < rows(); ++i) {
        if (static_cast<int>(entries_[i].size()) != source_.rank())
            throw InputError("matrix row " + std::to_string(i) + " has wrong length");
        for (int j = 0; j < cols(); ++j) {
            const Poly& e = entries_[i][j];
            if (e.is_zero()) continue;
            Multidegree expected = source_.twists[j] - target_.twists[i];
            auto got = ring.multidegree_of(e);
            if (!got || *got != expected)
                throw NotHomogeneousError(
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + "): degree " +
                    (got ? deg_str(*got) : std::string("mixed")) + ", expected " +
                    deg_str(expected));
        }
    }
}

GradedMatrix GradedMatrix::zero(FreeModule source, FreeModule target) {
    std::vector<std::vector<Poly>> entries(target.rank(),
                                           std::vector<Poly>(source.rank()));
    return GradedMatrix(std::move(source), std::move(target), std::move(entries));
}

bool GradedMatrix::is_zero() const {
    for (const auto& row : entries_)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

bool GradedMatrix::has_unit_entry() const {
    for (const auto& row : entries_)
        for (const auto& e : row)
            if (e.is_unit()) return true;
    return false;
}

std::vector<ModPoly> GradedMatrix::columns_as_modpolys() const {
    std::vector<ModPoly> cols_out;
    cols_out.reserve(cols());
    for (int j = 0; j < cols(); ++j) {
        std::vector<ModTerm> ts;
        for (int i = 0; i < rows(); ++i)
            for (const Term& t : entries_[i][j].terms())
                ts.push_back(ModTerm{t.mon, i, t.coef});
        cols_out.push_back(ModPoly::from_terms(std::move(ts), canonical_order()));
    }
    return cols_out;
}

GradedMatrix matrix_product(const GradedMatrix& a, const GradedMatrix& b) {
    check_same_ring(a.ring(), b.ring());
    if (!a.source().same_twists(b.target()))
        throw InputError("matrix product: middle modules do not match");
    std::vector<std::vector<Poly>> prod(a.rows(), std::vector<Poly>(b.cols()));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            Poly acc;
            for (int k = 0; k < a.cols(); ++k) {
                if (a.entry(i, k).is_zero() || b.entry(k, j).is_zero()) continue;
                acc = acc + a.entry(i, k) * b.entry(k, j);
            }
            prod[i][j] = std::move(acc);
        }
    return GradedMatrix(b.source(), a.target(), std::move(prod));
}

void validate_complex(const FreeComplex& F) {
    if (F.modules.empty()) throw InputError("complex has no modules");
    if (F.maps.size() + 1 != F.modules.size())
        throw InputError("complex needs one map per consecutive module pair");
    for (const auto& m : F.modules) check_same_ring(m.ring, F.modules.front().ring);
    for (int i = 0; i < F.length(); ++i) {
        if (!F.maps[i].target().same_twists(F.modules[i]) ||
            !F.maps[i].source().same_twists(F.modules[i + 1]))
            throw InputError("map " + std::to_string(i + 1) +
                             " does not match the adjacent modules");
    }
    for (int i = 0; i + 1 < F.length(); ++i) {
        GradedMatrix comp = matrix_product(F.maps[i], F.maps[i + 1]);
        for (int r = 0; r < comp.rows(); ++r)
            for (int c = 0; c < comp.cols(); ++c)
                if (!comp.entry(r, c).is_zero())
                    throw NotAComplexError("phi_" + std::to_string(i + 1) + " o phi_" +
                                           std::to_string(i + 2) + " has nonzero entry (" +
                                           std::to_string(r) + "," + std::to_string(c) + ")");
    }
}

Presentation presentation_of_quotient(const Ideal& I) {
    const RingPtr& ring = I.ring();
    FreeModule target{ring, {Multidegree::zero(ring->pic_rank())}};
    std::vector<Multidegree> twists;
    std::vector<Poly> row;
    for (const Poly& g : I.gens()) {
        auto d = ring->multidegree_of(g);
        if (!d) throw NotHomogeneousError("quotient presentation needs homogeneous generators");
        twists.push_back(*d);
        row.push_back(g);
    }
    FreeModule source{ring, std::move(twists)};
    return Presentation{GradedMatrix(std::move(source), std::move(target), {std::move(row)})};
}

// ---------------------------------------------------------------------------
// minors and rank

namespace {

std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

void check_matrix_cap(const GradedMatrix& phi) {
    int cap = compute_limits().max_matrix_dim;
    if (phi.rows() > cap || phi.cols() > cap)
        throw ResourceLimitError("matrix exceeds the " + std::to_string(cap) +
                                 "x" + std::to_string(cap) + " minor-expansion cap");
}

std::uint32_t eval_poly(const Poly& f, const std::vector<std::uint32_t>& pt,
                        std::uint32_t p) {
    std::uint64_t acc = 0;
    for (const Term& t : f.terms()) {
        std::uint64_t v = t.coef.value();
        for (int i = 0; i < t.mon.nvars(); ++i) {
            std::int32_t e = t.mon.exp(i);
            if (e == 0) continue;
            std::uint64_t base = pt[i], pw = 1;
            while (e) {
                if (e & 1) pw = (pw * base) % p;
                base = (base * base) % p;
                e >>= 1;
            }
            v = (v * pw) % p;
        }
        acc = (acc + v) % p;
    }
    return static_cast<std::uint32_t>(acc);
}

int gauss_rank(std::vector<std::vector<std::uint32_t>> m, std::uint32_t p) {
    if (m.empty() || m[0].empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        std::uint64_t inv = Scalar(p, m[rank][c]).inverse().value();
        for (int r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            std::uint64_t f = (m[r][c] * inv) % p;
            for (int cc = c; cc < cols; ++cc) {
                std::uint64_t sub = (f * m[rank][cc]) % p;
                m[r][cc] = static_cast<std::uint32_t>((m[r][cc] + p - sub) % p);
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

Ideal minors_ideal(int r, const GradedMatrix& phi, ExecMode mode) {
    const RingPtr& ring = phi.ring();
    if (r <= 0) return Ideal::unit(ring);
    if (r > std::min(phi.rows(), phi.cols())) return Ideal::zero(ring);
    check_matrix_cap(phi);
    auto row_sets = combinations(phi.rows(), r);
    auto col_sets = combinations(phi.cols(), r);
    std::vector<MinorSpec> specs;
    specs.reserve(row_sets.size() * col_sets.size());
    for (const auto& rs : row_sets)
        for (const auto& cs : col_sets) specs.emplace_back(rs, cs);
    std::vector<Poly> dets = minor_batch(phi.entries(), specs, canonical_order(), mode);
    std::vector<Poly> gens;
    for (Poly& d : dets)
        if (!d.is_zero()) gens.push_back(monic(d));
    std::sort(gens.begin(), gens.end(), poly_less_canonical);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return Ideal(ring, std::move(gens));
}

int rank_of(const GradedMatrix& phi, std::uint64_t seed) {
    const int R = phi.rows(), C = phi.cols();
    if (R == 0 || C == 0) return 0;
    check_matrix_cap(phi);
    const std::uint32_t p = phi.ring()->modulus();
    const int n = phi.ring()->nvars();

    int guess = 0;
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + 131 * R + C);
    std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<std::uint32_t> pt(n);
        for (auto& v : pt) v = dist(rng);
        std::vector<std::vector<std::uint32_t>> num(R, std::vector<std::uint32_t>(C));
        for (int i = 0; i < R; ++i)
            for (int j = 0; j < C; ++j) num[i][j] = eval_poly(phi.entry(i, j), pt, p);
        guess = std::max(guess, gauss_rank(std::move(num), p));
    }

    int r = guess;
    while (r < std::min(R, C)) {
        // certify I_{r+1} = 0, bumping r on any nonzero minor
        auto row_sets = combinations(R, r + 1);
        auto col_sets = combinations(C, r + 1);
        std::vector<MinorSpec> specs;
        specs.reserve(row_sets.size() * col_sets.size());
        for (const auto& rs : row_sets)
            for (const auto& cs : col_sets) specs.emplace_back(rs, cs);
        bool nonzero = false;
        const std::size_t chunk = 64;
        for (std::size_t at = 0; at < specs.size() && !nonzero; at += chunk) {
            std::vector<MinorSpec> part(specs.begin() + at,
                                        specs.begin() + std::min(at + chunk, specs.size()));
            for (Poly& d : minor_batch(phi.entries(), part, canonical_order(),
                                       default_exec_mode()))
                if (!d.is_zero()) {
                    nonzero = true;
                    break;
                }
        }
        if (!nonzero) break;
        ++r;
    }
    return r;
}

Ideal max_minors(const GradedMatrix& phi, std::uint64_t seed, ExecMode mode) {
    return minors_ideal(rank_of(phi, seed), phi, mode);
}

// ---------------------------------------------------------------------------
// syzygies

namespace {

Multidegree column_twist(const RingPtr& ring, const ModPoly& w,
                         const std::vector<Multidegree>& source_twists) {
    // twist of the free summand generated by w: degree of any nonzero entry
    // plus the twist it sits over
    const ModTerm& t = w.lead();
    Poly coord = w.coordinate(t.pos, canonical_order());
    auto d = ring->multidegree_of(coord);
    if (!d) throw Error("syzygy column is not homogeneous");
    return *d + source_twists[t.pos];
}

GradedMatrix modpolys_to_matrix(const FreeModule& target, const std::vector<ModPoly>& cols) {
    const RingPtr& ring = target.ring;
    std::vector<Multidegree> twists;
    twists.reserve(cols.size());
    for (const ModPoly& w : cols) twists.push_back(column_twist(ring, w, target.twists));
    std::vector<std::vector<Poly>> entries(target.rank(), std::vector<Poly>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < target.rank(); ++i)
            entries[i][j] = cols[j].coordinate(i, canonical_order());
    FreeModule source{ring, std::move(twists)};
    return GradedMatrix(std::move(source), target, std::move(entries));
}

}  // namespace

namespace {

std::vector<std::int64_t> twist_weights(const FreeModule& m) {
    std::vector<std::int64_t> w;
    w.reserve(m.rank());
    for (const auto& t : m.twists) {
        std::int64_t s = 0;
        for (auto c : t.c) s += c;
        w.push_back(s);
    }
    return w;
}

}  // namespace

GradedMatrix syzygy_matrix(const GradedMatrix& phi, ExecMode mode) {
    ModGbResult res = module_buchberger(phi.columns_as_modpolys(), phi.ring()->nvars(),
                                        phi.ring()->modulus(), canonical_order(), mode);
    // keep a minimal generating subset; iterated syzygies of redundant
    // generating sets blow up
    std::vector<ModPoly> gens =
        minimal_generators(res.syzygies, twist_weights(phi.source()), canonical_order());
    return modpolys_to_matrix(phi.source(), gens);
}

// ---------------------------------------------------------------------------
// minimal free resolution

namespace {

struct Grid {
    std::vector<Multidegree> src;
    std::vector<Multidegree> tgt;
    std::vector<std::vector<Poly>> e;  // tgt.size() x src.size()
};

Grid to_grid(const GradedMatrix& m) {
    return Grid{m.source().twists, m.target().twists, m.entries()};
}

GradedMatrix from_grid(const RingPtr& ring, const Grid& g) {
    return GradedMatrix(FreeModule{ring, g.src}, FreeModule{ring, g.tgt}, g.e);
}

// Remove split summands: for each unit pivot, clear its row and column by
// homogeneous row/column operations, mirror the row operations into prev
// (the matrix whose source is this matrix's target), then delete the pivot
// row and column.
void prune_units(Grid& m, Grid* prev) {
    for (;;) {
        int pi = -1, pj = -1;
        for (std::size_t i = 0; i < m.e.size() && pi < 0; ++i)
            for (std::size_t j = 0; j < m.e[i].size(); ++j)
                if (m.e[i][j].is_unit()) {
                    pi = static_cast<int>(i);
                    pj = static_cast<int>(j);
                    break;
                }
        if (pi < 0) return;
        const Poly u = m.e[pi][pj];
        const Scalar uinv = u.lead().coef.inverse();
        const int rows = static_cast<int>(m.tgt.size());
        const int cols = static_cast<int>(m.src.size());
        // column ops: clear row pi
        for (int j = 0; j < cols; ++j) {
            if (j == pj || m.e[pi][j].is_zero()) continue;
            Poly q = scaled(m.e[pi][j], uinv);
            for (int i = 0; i < rows; ++i)
                m.e[i][j] = m.e[i][j] - q * m.e[i][pj];
        }
        // row ops: clear column pj; mirror into prev as column operations
        for (int i = 0; i < rows; ++i) {
            if (i == pi || m.e[i][pj].is_zero()) continue;
            Poly c = scaled(m.e[i][pj], uinv);
            for (int j = 0; j < cols; ++j)
                m.e[i][j] = m.e[i][j] - c * m.e[pi][j];
            if (prev) {
                for (std::size_t r = 0; r < prev->e.size(); ++r)
                    prev->e[r][pi] = prev->e[r][pi] + c * prev->e[r][i];
            }
        }
        // delete pivot row and column
        m.e.erase(m.e.begin() + pi);
        for (auto& row : m.e) row.erase(row.begin() + pj);
        m.tgt.erase(m.tgt.begin() + pi);
        m.src.erase(m.src.begin() + pj);
        if (prev) {
            for (auto& row : prev->e) row.erase(row.begin() + pi);
            prev->src.erase(prev->src.begin() + pi);
        }
    }
}

}  // namespace

FreeComplex minimal_free_resolution(const Presentation& P, int maxlen) {
    const RingPtr& ring = P.matrix.ring();
    if (maxlen < 1) throw InputError("resolution length bound must be positive");

    Grid first = to_grid(P.matrix);
    prune_units(first, nullptr);

    FreeComplex res;
    res.modules.push_back(FreeModule{ring, first.tgt});
    res.modules.push_back(FreeModule{ring, first.src});
    res.maps.push_back(from_grid(ring, first));

    for (int k = 1;; ++k) {
        const GradedMatrix& last = res.maps.back();
        if (last.cols() == 0) break;
        GradedMatrix syz = syzygy_matrix(last);
        if (syz.cols() == 0) break;
        Grid scur = to_grid(syz);
        Grid sprev = to_grid(last);
        prune_units(scur, &sprev);
        res.maps.back() = from_grid(ring, sprev);
        res.modules.back() = FreeModule{ring, sprev.src};
        if (scur.src.empty()) break;
        if (k >= maxlen) throw PartialResolutionError(res);
        res.maps.push_back(from_grid(ring, scur));
        res.modules.push_back(FreeModule{ring, scur.src});
    }
    return res;
}

// ---------------------------------------------------------------------------
// homology

Presentation homology_presentation(const FreeComplex& F, int i) {
    if (i < 1 || i > F.length())
        throw InputError("homology index " + std::to_string(i) + " out of range");
    const RingPtr& ring = F.ring();
    const GradedMatrix& phi_i = F.maps[i - 1];

    // generators of H_i: a minimal generating set of ker(phi_i)
    GradedMatrix kgens = syzygy_matrix(phi_i);
    const FreeModule& hmod = kgens.source();
    const int t = hmod.rank();

    // module GB of the kernel generators, tracked, for lifting im(phi_{i+1})
    ModGbResult kgb = module_buchberger(kgens.columns_as_modpolys(), ring->nvars(),
                                        ring->modulus(), canonical_order(),
                                        default_exec_mode());

    std::vector<Multidegree> rel_twists;
    std::vector<ModPoly> rel_cols;  // elements of S^t

    if (i < F.length()) {
        const GradedMatrix& phi_next = F.maps[i];
        auto next_cols = phi_next.columns_as_modpolys();
        for (int c = 0; c < phi_next.cols(); ++c) {
            ModDivision div = mod_divide(next_cols[c], kgb.gb, canonical_order());
            if (!div.remainder.is_zero())
                throw NotAComplexError("column " + std::to_string(c) + " of phi_" +
                                       std::to_string(i + 1) + " is not in ker(phi_" +
                                       std::to_string(i) + ")");
            // combine through the tracking to express in the kernel generators
            std::vector<ModTerm> ts;
            for (std::size_t l = 0; l < kgb.gb.size(); ++l) {
                if (div.quotients[l].is_zero()) continue;
                for (const ModTerm& wt : kgb.track[l].terms())
                    for (const Term& qt : div.quotients[l].terms())
                        ts.push_back(ModTerm{wt.mon * qt.mon, wt.pos, wt.coef * qt.coef});
            }
            rel_cols.push_back(ModPoly::from_terms(std::move(ts), canonical_order()));
            rel_twists.push_back(phi_next.source().twists[c]);
        }
    }
    for (const ModPoly& s :
         minimal_generators(kgb.syzygies, twist_weights(hmod), canonical_order())) {
        rel_cols.push_back(s);
        rel_twists.push_back(column_twist(ring, s, hmod.twists));
    }

    std::vector<std::vector<Poly>> entries(t, std::vector<Poly>(rel_cols.size()));
    for (std::size_t j = 0; j < rel_cols.size(); ++j)
        for (int r = 0; r < t; ++r)
            entries[r][j] = rel_cols[j].coordinate(r, canonical_order());
    FreeModule rel_src{ring, std::move(rel_twists)};
    return Presentation{GradedMatrix(std::move(rel_src), hmod, std::move(entries))};
}

// ---------------------------------------------------------------------------
// truncation of a resolution to a virtual resolution of a pair

FreeComplex vres_of_pair(const FreeComplex& R, const Multidegree& d) {
    const RingPtr& ring = R.ring();
    if (!ring->is_product())
        throw InputError("virtual resolution of a pair needs a product of projective spaces");
    if (d.rank() != ring->pic_rank()) throw InputError("degree has the wrong rank");
    Multidegree bound = d;
    for (int j = 0; j < ring->pic_rank(); ++j) bound.c[j] += ring->factor_dims()[j];

    std::vector<std::vector<int>> kept(R.modules.size());
    for (std::size_t i = 0; i < R.modules.size(); ++i)
        for (int j = 0; j < R.modules[i].rank(); ++j)
            if (R.modules[i].twists[j].leq(bound)) kept[i].push_back(j);

    FreeComplex out;
    for (std::size_t i = 0; i < R.modules.size(); ++i) {
        std::vector<Multidegree> tw;
        for (int j : kept[i]) tw.push_back(R.modules[i].twists[j]);
        out.modules.push_back(FreeModule{ring, std::move(tw)});
    }
    for (int m = 0; m < R.length(); ++m) {
        // a kept column may not map into a dropped row; minimality of R
        // guarantees this, so a violation is a data error
        for (int j : kept[m + 1])
            for (int i = 0; i < R.modules[m].rank(); ++i)
                if (!R.maps[m].entry(i, j).is_zero() &&
                    std::find(kept[m].begin(), kept[m].end(), i) == kept[m].end())
                    throw InputError("truncation is not closed under the differential at map " +
                                     std::to_string(m + 1));
        std::vector<std::vector<Poly>> entries(kept[m].size(),
                                               std::vector<Poly>(kept[m + 1].size()));
        for (std::size_t a = 0; a < kept[m].size(); ++a)
            for (std::size_t b = 0; b < kept[m + 1].size(); ++b)
                entries[a][b] = R.maps[m].entry(kept[m][a], kept[m + 1][b]);
        out.maps.push_back(GradedMatrix(out.modules[m + 1], out.modules[m], std::move(entries)));
    }
    while (!out.maps.empty() && out.modules.back().rank() == 0) {
        out.maps.pop_back();
        out.modules.pop_back();
    }
    return out;
}

}  // namespace virtua
