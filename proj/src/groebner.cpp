#include "virtua/groebner.hpp"

#include <algorithm>
#include <cassert>

#include "virtua/limits.hpp"

namespace virtua {

namespace {

// a[h..] - b, both strictly decreasing under ord
std::vector<Term> merge_sub(const std::vector<Term>& a, std::size_t h, const Poly& b,
                            const MonomialOrder& ord) {
    const auto& bt = b.terms();
    std::vector<Term> r;
    r.reserve(a.size() - h + bt.size());
    std::size_t i = h, j = 0;
    while (i < a.size() && j < bt.size()) {
        int c = ord.compare(a[i].mon, bt[j].mon);
        if (c > 0) {
            r.push_back(a[i++]);
        } else if (c < 0) {
            r.push_back(Term{bt[j].mon, -bt[j].coef});
            ++j;
        } else {
            Scalar s = a[i].coef - bt[j].coef;
            if (!s.is_zero()) r.push_back(Term{a[i].mon, s});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < bt.size(); ++j) {
        r.push_back(Term{bt[j].mon, -bt[j].coef});
    }
    return r;
}

}  // namespace

Poly reduce_full(const Poly& f, std::span<const Poly> basis, const MonomialOrder& ord) {
    if (f.is_zero()) return f;
    std::vector<Term> out;
    std::vector<Term> cur = f.terms();
    std::size_t h = 0;
    while (h < cur.size()) {
        const Term& lt = cur[h];
        const Poly* red = nullptr;
        for (const auto& g : basis) {
            if (!g.is_zero() && g.lead().mon.divides(lt.mon)) {
                red = &g;
                break;
            }
        }
        if (!red) {
            out.push_back(lt);
            ++h;
            continue;
        }
        Scalar c = lt.coef / red->lead().coef;
        Monomial m = red->lead().mon.divide(lt.mon);
        cur = merge_sub(cur, h, term_mul(*red, m, c), ord);
        h = 0;
    }
    return Poly::from_sorted(std::move(out));
}

Poly s_poly(const Poly& f, const Poly& g, const MonomialOrder& ord) {
    const Monomial L = lcm(f.lead().mon, g.lead().mon);
    Poly a = term_mul(f, f.lead().mon.divide(L), f.lead().coef.inverse());
    Poly b = term_mul(g, g.lead().mon.divide(L), g.lead().coef.inverse());
    return sub(a, b, ord);
}

namespace {

struct Pair {
    int i, j;
    Monomial l;
    std::int64_t deg;
};

}  // namespace

GroebnerBasis groebner_basis(std::span<const Poly> gens, const MonomialOrder& ord,
                             ExecMode mode) {
    std::vector<Poly> basis;
    std::vector<Pair> pairs;

    auto lead_mon = [&](int i) -> const Monomial& { return basis[i].lead().mon; };

    // Gebauer-Moller update on inserting basis[t]
    auto gm_update = [&](int t) {
        const Monomial& lt = lead_mon(t);
        struct Cand {
            int i;
            Monomial l;
            bool cop;
            bool alive;
        };
        std::vector<Cand> cand;
        cand.reserve(t);
        for (int i = 0; i < t; ++i)
            cand.push_back(Cand{i, lcm(lead_mon(i), lt), coprime(lead_mon(i), lt), true});
        std::vector<int> keep;
        for (std::size_t a = 0; a < cand.size(); ++a) {
            cand[a].alive = false;
            bool ok = cand[a].cop;
            if (!ok) {
                bool covered = false;
                for (std::size_t b = 0; b < cand.size() && !covered; ++b)
                    if (cand[b].alive && cand[b].l.divides(cand[a].l)) covered = true;
                for (int k : keep)
                    if (!covered && cand[k].l.divides(cand[a].l)) covered = true;
                ok = !covered;
            }
            if (ok) keep.push_back(static_cast<int>(a));
        }
        // filter old pairs through the chain criterion
        std::vector<Pair> surviving;
        surviving.reserve(pairs.size());
        for (const Pair& pr : pairs) {
            if (!lt.divides(pr.l) || lcm(lead_mon(pr.i), lt) == pr.l ||
                lcm(lead_mon(pr.j), lt) == pr.l)
                surviving.push_back(pr);
        }
        pairs = std::move(surviving);
        for (int k : keep) {
            if (cand[k].cop) continue;  // product criterion
            pairs.push_back(Pair{cand[k].i, t, cand[k].l, cand[k].l.total_degree()});
        }
    };

    for (const Poly& g : gens) {
        if (g.is_zero()) continue;
        Poly p = reduce_full(resorted(g, ord), basis, ord);
        if (p.is_zero()) continue;
        basis.push_back(monic(p));
        gm_update(static_cast<int>(basis.size()) - 1);
    }

    while (!pairs.empty()) {
        check_compute_budget(pairs.size() + basis.size());
        std::int64_t dmin = pairs[0].deg;
        for (const Pair& pr : pairs) dmin = std::min(dmin, pr.deg);
        std::vector<Pair> batch;
        std::vector<Pair> rest;
        for (Pair& pr : pairs)
            (pr.deg == dmin ? batch : rest).push_back(std::move(pr));
        pairs = std::move(rest);
        std::sort(batch.begin(), batch.end(), [](const Pair& a, const Pair& b) {
            return a.i != b.i ? a.i < b.i : a.j < b.j;
        });

        std::vector<Poly> spolys;
        spolys.reserve(batch.size());
        for (const Pair& pr : batch)
            spolys.push_back(s_poly(basis[pr.i], basis[pr.j], ord));
        std::vector<Poly> rems = normal_form_batch(spolys, basis, ord, mode);

        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < rems.size(); ++k)
            if (!rems[k].is_zero()) idx.push_back(k);
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            int c = ord.compare(rems[a].lead().mon, rems[b].lead().mon);
            return c != 0 ? c < 0 : a < b;
        });
        for (std::size_t k : idx) {
            Poly r = reduce_full(rems[k], basis, ord);
            if (r.is_zero()) continue;
            basis.push_back(monic(r));
            gm_update(static_cast<int>(basis.size()) - 1);
        }
    }

    // reduced form: minimal leads, fully reduced tails, sorted ascending
    auto poly_less = [&](const Poly& a, const Poly& b) {
        const auto& ta = a.terms();
        const auto& tb = b.terms();
        for (std::size_t k = 0; k < ta.size() && k < tb.size(); ++k) {
            int c = ord.compare(ta[k].mon, tb[k].mon);
            if (c != 0) return c < 0;
            if (ta[k].coef.value() != tb[k].coef.value())
                return ta[k].coef.value() < tb[k].coef.value();
        }
        return ta.size() < tb.size();
    };
    std::sort(basis.begin(), basis.end(), poly_less);
    std::vector<Poly> kept;
    for (const Poly& g : basis) {
        bool redundant = false;
        for (const Poly& k : kept)
            if (k.lead().mon.divides(g.lead().mon)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(g);
    }
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<Poly> others;
        others.reserve(kept.size() - 1);
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        kept[i] = monic(reduce_full(kept[i], others, ord));
    }

    GroebnerBasis gb{std::move(kept), ord};
    // membership certificate for the inputs
    for (const Poly& g : gens) {
        if (!g.is_zero() && !normal_form(resorted(g, ord), gb).is_zero())
            throw Error("groebner_basis: input generator failed the membership certificate");
    }
    return gb;
}

Poly normal_form(const Poly& f, const GroebnerBasis& gb) {
    return reduce_full(f, gb.elems, gb.order);
}

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens, bool require_homogeneous)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    if (!ring_) throw InputError("ideal requires a ring");
    gens_.reserve(gens.size());
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.nvars() != ring_->nvars())
            throw InputError("ideal generator has the wrong number of variables");
        if (require_homogeneous && !ring_->is_homogeneous(g))
            throw NotHomogeneousError("ideal generator is not homogeneous");
        gens_.push_back(std::move(g));
    }
}

Ideal Ideal::unit(RingPtr ring) {
    Poly one = Poly::constant(ring->nvars(), Scalar::one(ring->modulus()));
    return Ideal(std::move(ring), {one});
}

Ideal Ideal::span_of_vars(RingPtr ring, const std::vector<int>& vars) {
    std::vector<Poly> gens;
    gens.reserve(vars.size());
    for (int v : vars)
        gens.push_back(Poly::term(
            Term{Monomial::variable(ring->nvars(), v), Scalar::one(ring->modulus())}));
    return Ideal(std::move(ring), std::move(gens));
}

const GroebnerBasis& Ideal::reduced_gb() const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->gb)
        cache_->gb = std::make_shared<const GroebnerBasis>(
            groebner_basis(gens_, canonical_order(), default_exec_mode()));
    return *cache_->gb;
}

bool Ideal::contains(const Poly& f) const { return normal_form(f, reduced_gb()).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
    for (const Poly& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

bool Ideal::operator==(const Ideal& o) const {
    check_same_ring(ring_, o.ring_);
    const auto& a = reduced_gb().elems;
    const auto& b = o.reduced_gb().elems;
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

// ---------------------------------------------------------------------------
// ideal-theoretic toolbox

namespace {

// g / f for f | g, by repeated leading-term cancellation
Poly exact_div(const Poly& g, const Poly& f, const MonomialOrder& ord) {
    if (g.is_zero()) return g;
    Poly rem = g;
    std::vector<Term> quot;
    while (!rem.is_zero()) {
        if (!f.lead().mon.divides(rem.lead().mon))
            throw Error("exact_div: not divisible");
        Scalar c = rem.lead().coef / f.lead().coef;
        Monomial m = f.lead().mon.divide(rem.lead().mon);
        quot.push_back(Term{m, c});
        rem = sub(rem, term_mul(f, m, c), ord);
    }
    return Poly::from_sorted(std::move(quot));
}

Poly aux_var_poly(int nvars_ext, std::uint32_t p) {
    return Poly::term(Term{Monomial::variable(nvars_ext, nvars_ext - 1), Scalar::one(p)});
}

}  // namespace

Ideal intersect(const Ideal& I, const Ideal& J) {
    check_same_ring(I.ring(), J.ring());
    if (I.is_zero() || J.is_zero()) return Ideal::zero(I.ring());
    if (I.is_unit()) return J;
    if (J.is_unit()) return I;

    const int n = I.ring()->nvars();
    const std::uint32_t p = I.ring()->modulus();
    const Poly t = aux_var_poly(n + 1, p);
    const Poly one = Poly::constant(n + 1, Scalar::one(p));

    std::vector<Poly> ext;
    for (const Poly& g : I.reduced_gb().elems) ext.push_back(t * extend_vars(g, n + 1));
    for (const Poly& h : J.reduced_gb().elems) ext.push_back((one - t) * extend_vars(h, n + 1));

    std::vector<int> perm(n + 1);
    perm[0] = n;
    for (int i = 0; i < n; ++i) perm[i + 1] = i;
    MonomialOrder elim = MonomialOrder::block_elim(1, perm);

    GroebnerBasis gb = groebner_basis(ext, elim, default_exec_mode());
    std::vector<Poly> kept;
    for (const Poly& g : gb.elems)
        if (g.lead().mon.exp(n) == 0)
            kept.push_back(resorted(contract_vars(g, n), canonical_order()));
    return Ideal(I.ring(), std::move(kept));
}

Ideal quotient_by_poly(const Ideal& I, const Poly& f) {
    if (f.is_zero()) throw DivisionByZeroError("colon by the zero polynomial");
    if (f.is_unit() || I.is_unit()) return I.is_unit() ? Ideal::unit(I.ring()) : I;
    if (I.is_zero()) return I;
    Ideal K = intersect(I, Ideal(I.ring(), {f}));
    std::vector<Poly> gens;
    gens.reserve(K.gens().size());
    for (const Poly& g : K.gens()) gens.push_back(exact_div(g, f, canonical_order()));
    return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J, bool* zero_warning) {
    check_same_ring(I.ring(), J.ring());
    if (zero_warning) *zero_warning = false;
    if (J.is_zero()) {
        if (zero_warning) *zero_warning = true;
        return Ideal::unit(I.ring());
    }
    if (I.is_unit()) return I;
    bool first = true;
    Ideal acc = Ideal::zero(I.ring());
    for (const Poly& f : J.gens()) {
        Ideal q = quotient_by_poly(I, f);
        acc = first ? q : intersect(acc, q);
        first = false;
        if (acc.is_zero()) break;
    }
    return acc;
}

Ideal saturate(const Ideal& I, const Ideal& J) {
    check_same_ring(I.ring(), J.ring());
    Ideal cur = I;
    for (;;) {
        if (cur.is_unit()) return cur;
        Ideal next = ideal_quotient(cur, J);
        if (next == cur) return cur;
        cur = next;
    }
}

Ideal saturate_by_irrelevant(const Ideal& I, const IrrelevantIdeal& B) {
    Ideal cur = I;
    for (const auto& comp : B.components) {
        if (cur.is_unit()) return cur;
        cur = saturate(cur, component_ideal(I.ring(), comp));
    }
    return cur;
}

bool radical_membership(const Poly& f, const Ideal& I) {
    if (f.is_zero()) return true;
    const int n = I.ring()->nvars();
    const std::uint32_t p = I.ring()->modulus();
    std::vector<Poly> ext;
    for (const Poly& g : I.reduced_gb().elems) ext.push_back(extend_vars(g, n + 1));
    Poly one = Poly::constant(n + 1, Scalar::one(p));
    ext.push_back(one - aux_var_poly(n + 1, p) * extend_vars(f, n + 1));
    GroebnerBasis gb = groebner_basis(ext, canonical_order(), default_exec_mode());
    return gb.is_unit();
}

ExtInt codim(const Ideal& I) {
    const GroebnerBasis& gb = I.reduced_gb();
    if (gb.is_unit()) return ExtInt::infinity();
    const int n = I.ring()->nvars();
    if (n > 20) throw ResourceLimitError("dimension search needs <= 20 variables");
    std::vector<std::uint32_t> masks;
    for (const Poly& g : gb.elems) {
        std::uint32_t m = g.lead().mon.support_mask();
        if (std::find(masks.begin(), masks.end(), m) == masks.end()) masks.push_back(m);
    }
    int dim = 0;
    for (std::uint32_t u = 0; u < (1u << n); ++u) {
        int size = __builtin_popcount(u);
        if (size <= dim) continue;
        bool independent = true;
        for (std::uint32_t m : masks)
            if ((m & ~u) == 0) {
                independent = false;
                break;
            }
        if (independent) dim = size;
    }
    return ExtInt(n - dim);
}

ExtInt grade(const Ideal& I) { return codim(I); }

Ideal component_ideal(const RingPtr& ring, const std::vector<int>& vars) {
    return Ideal::span_of_vars(ring, vars);
}

Ideal materialize_irrelevant(const RingPtr& ring, const IrrelevantIdeal& B) {
    if (B.components.empty()) throw InputError("irrelevant ideal has no components");
    Ideal acc = component_ideal(ring, B.components[0]);
    for (std::size_t i = 1; i < B.components.size(); ++i)
        acc = intersect(acc, component_ideal(ring, B.components[i]));
    return acc;
}

}  // namespace virtua
