#include "virtua/modgb.hpp"

#include <algorithm>

#include "virtua/limits.hpp"

namespace virtua {

ModPoly ModPoly::from_terms(std::vector<ModTerm> terms, const MonomialOrder& ord) {
    std::sort(terms.begin(), terms.end(), [&](const ModTerm& a, const ModTerm& b) {
        return mod_compare(ord, a.mon, a.pos, b.mon, b.pos) > 0;
    });
    ModPoly f;
    f.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!f.terms_.empty() && f.terms_.back().pos == t.pos &&
            f.terms_.back().mon == t.mon) {
            f.terms_.back().coef = f.terms_.back().coef + t.coef;
            if (f.terms_.back().coef.is_zero()) f.terms_.pop_back();
        } else if (!t.coef.is_zero()) {
            f.terms_.push_back(std::move(t));
        }
    }
    return f;
}

Poly ModPoly::coordinate(int pos, const MonomialOrder& ord) const {
    std::vector<Term> ts;
    for (const auto& t : terms_)
        if (t.pos == pos) ts.push_back(Term{t.mon, t.coef});
    return Poly::from_terms(std::move(ts), ord);
}

bool ModPoly::operator==(const ModPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].pos != o.terms_[i].pos || terms_[i].mon != o.terms_[i].mon ||
            !(terms_[i].coef == o.terms_[i].coef))
            return false;
    return true;
}

ModPoly mod_add(const ModPoly& a, const ModPoly& b, const MonomialOrder& ord) {
    const auto& at = a.terms();
    const auto& bt = b.terms();
    std::vector<ModTerm> r;
    r.reserve(at.size() + bt.size());
    std::size_t i = 0, j = 0;
    while (i < at.size() && j < bt.size()) {
        int c = mod_compare(ord, at[i].mon, at[i].pos, bt[j].mon, bt[j].pos);
        if (c > 0) {
            r.push_back(at[i++]);
        } else if (c < 0) {
            r.push_back(bt[j++]);
        } else {
            Scalar s = at[i].coef + bt[j].coef;
            if (!s.is_zero()) r.push_back(ModTerm{at[i].mon, at[i].pos, s});
            ++i;
            ++j;
        }
    }
    for (; i < at.size(); ++i) r.push_back(at[i]);
    for (; j < bt.size(); ++j) r.push_back(bt[j]);
    return ModPoly::from_sorted(std::move(r));
}

ModPoly mod_scaled(const ModPoly& f, const Scalar& c) {
    if (c.is_zero()) return ModPoly{};
    std::vector<ModTerm> r;
    r.reserve(f.terms().size());
    for (const auto& t : f.terms()) r.push_back(ModTerm{t.mon, t.pos, t.coef * c});
    return ModPoly::from_sorted(std::move(r));
}

ModPoly mod_sub(const ModPoly& a, const ModPoly& b, const MonomialOrder& ord) {
    if (b.is_zero()) return a;
    return mod_add(a, mod_scaled(b, -Scalar::one(b.lead().coef.modulus())), ord);
}

ModPoly mod_term_mul(const ModPoly& f, const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return ModPoly{};
    std::vector<ModTerm> r;
    r.reserve(f.terms().size());
    for (const auto& t : f.terms()) r.push_back(ModTerm{t.mon * m, t.pos, t.coef * c});
    return ModPoly::from_sorted(std::move(r));
}

ModPoly mod_monic(const ModPoly& f) {
    if (f.is_zero() || f.lead().coef.is_one()) return f;
    return mod_scaled(f, f.lead().coef.inverse());
}

namespace {

struct Tracked {
    ModPoly v;  // element of the ambient free module
    ModPoly w;  // its expression in source coordinates
};

// cur[h..] - g, both sorted
std::vector<ModTerm> merge_sub_terms(const std::vector<ModTerm>& a, std::size_t h,
                                     const ModPoly& g, const MonomialOrder& ord) {
    const auto& bt = g.terms();
    std::vector<ModTerm> r;
    r.reserve(a.size() - h + bt.size());
    std::size_t i = h, j = 0;
    while (i < a.size() && j < bt.size()) {
        int c = mod_compare(ord, a[i].mon, a[i].pos, bt[j].mon, bt[j].pos);
        if (c > 0) {
            r.push_back(a[i++]);
        } else if (c < 0) {
            r.push_back(ModTerm{bt[j].mon, bt[j].pos, -bt[j].coef});
            ++j;
        } else {
            Scalar s = a[i].coef - bt[j].coef;
            if (!s.is_zero()) r.push_back(ModTerm{a[i].mon, a[i].pos, s});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < bt.size(); ++j) r.push_back(ModTerm{bt[j].mon, bt[j].pos, -bt[j].coef});
    return r;
}

// full reduction of f.v against the basis, mirroring every operation on f.w
Tracked reduce_tracked(const Tracked& f, const std::vector<Tracked>& basis,
                       const MonomialOrder& ord) {
    std::vector<ModTerm> out;
    std::vector<ModTerm> cur = f.v.terms();
    ModPoly w = f.w;
    std::size_t h = 0;
    while (h < cur.size()) {
        const ModTerm& lt = cur[h];
        const Tracked* red = nullptr;
        for (const auto& g : basis) {
            if (g.v.is_zero()) continue;
            const ModTerm& gl = g.v.lead();
            if (gl.pos == lt.pos && gl.mon.divides(lt.mon)) {
                red = &g;
                break;
            }
        }
        if (!red) {
            out.push_back(lt);
            ++h;
            continue;
        }
        Scalar c = lt.coef / red->v.lead().coef;
        Monomial m = red->v.lead().mon.divide(lt.mon);
        cur = merge_sub_terms(cur, h, mod_term_mul(red->v, m, c), ord);
        w = mod_sub(w, mod_term_mul(red->w, m, c), ord);
        h = 0;
    }
    return Tracked{ModPoly::from_sorted(std::move(out)), std::move(w)};
}

struct ModPair {
    int i, j;
    Monomial l;
    std::int64_t deg;
};

Tracked s_pair(const Tracked& a, const Tracked& b, const MonomialOrder& ord) {
    const Monomial L = lcm(a.v.lead().mon, b.v.lead().mon);
    Monomial ma = a.v.lead().mon.divide(L);
    Monomial mb = b.v.lead().mon.divide(L);
    Scalar ca = a.v.lead().coef.inverse();
    Scalar cb = b.v.lead().coef.inverse();
    return Tracked{mod_sub(mod_term_mul(a.v, ma, ca), mod_term_mul(b.v, mb, cb), ord),
                   mod_sub(mod_term_mul(a.w, ma, ca), mod_term_mul(b.w, mb, cb), ord)};
}

}  // namespace

ModGbResult module_buchberger(const std::vector<ModPoly>& columns, int nvars,
                              std::uint32_t p, const MonomialOrder& ord, ExecMode mode) {
    const int s = static_cast<int>(columns.size());
    ModGbResult result;
    result.source_rank = s;

    std::vector<Tracked> basis;
    std::vector<ModPair> pairs;
    const Scalar one = Scalar::one(p);

    // Pairs are never eliminated here: the collected zero reductions must
    // generate the whole syzygy module.
    auto add_pairs_for = [&](int t) {
        const ModTerm& lt = basis[t].v.lead();
        for (int i = 0; i < t; ++i) {
            const ModTerm& li = basis[i].v.lead();
            if (li.pos != lt.pos) continue;
            Monomial l = lcm(li.mon, lt.mon);
            pairs.push_back(ModPair{i, t, l, l.total_degree()});
        }
    };

    for (int j = 0; j < s; ++j) {
        if (columns[j].is_zero()) {
            result.syzygies.push_back(ModPoly::basis_vector(nvars, j, one));
            continue;
        }
        basis.push_back(Tracked{columns[j], ModPoly::basis_vector(nvars, j, one)});
        add_pairs_for(static_cast<int>(basis.size()) - 1);
    }

    while (!pairs.empty()) {
        check_compute_budget(pairs.size() + basis.size());
        std::int64_t dmin = pairs[0].deg;
        for (const ModPair& pr : pairs) dmin = std::min(dmin, pr.deg);
        std::vector<ModPair> batch, rest;
        for (ModPair& pr : pairs) (pr.deg == dmin ? batch : rest).push_back(std::move(pr));
        pairs = std::move(rest);
        std::sort(batch.begin(), batch.end(), [](const ModPair& a, const ModPair& b) {
            return a.i != b.i ? a.i < b.i : a.j < b.j;
        });

        std::vector<Tracked> sps(batch.size());
        for (std::size_t k = 0; k < batch.size(); ++k)
            sps[k] = s_pair(basis[batch[k].i], basis[batch[k].j], ord);
        std::vector<Tracked> reduced(batch.size());
        run_indexed(batch.size(), mode,
                    [&](std::size_t k) { reduced[k] = reduce_tracked(sps[k], basis, ord); });

        std::vector<std::size_t> idx(batch.size());
        for (std::size_t k = 0; k < batch.size(); ++k) idx[k] = k;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            bool za = reduced[a].v.is_zero(), zb = reduced[b].v.is_zero();
            if (za != zb) return zb;  // nonzero remainders first
            if (za) return a < b;
            const ModTerm& la = reduced[a].v.lead();
            const ModTerm& lb = reduced[b].v.lead();
            int c = mod_compare(ord, la.mon, la.pos, lb.mon, lb.pos);
            return c != 0 ? c < 0 : a < b;
        });
        for (std::size_t k : idx) {
            Tracked r = reduced[k];
            if (!r.v.is_zero()) r = reduce_tracked(r, basis, ord);  // basis may have grown
            if (r.v.is_zero()) {
                if (!r.w.is_zero()) result.syzygies.push_back(mod_monic(r.w));
                continue;
            }
            Scalar inv = r.v.lead().coef.inverse();
            basis.push_back(Tracked{mod_scaled(r.v, inv), mod_scaled(r.w, inv)});
            add_pairs_for(static_cast<int>(basis.size()) - 1);
        }
    }

    result.gb.reserve(basis.size());
    result.track.reserve(basis.size());
    for (auto& t : basis) {
        result.gb.push_back(std::move(t.v));
        result.track.push_back(std::move(t.w));
    }
    return result;
}

namespace {

// full reduction without tracking
ModPoly mod_reduce(const ModPoly& f, const std::vector<ModPoly>& basis,
                   const MonomialOrder& ord) {
    std::vector<ModTerm> out;
    std::vector<ModTerm> cur = f.terms();
    std::size_t h = 0;
    while (h < cur.size()) {
        const ModTerm& lt = cur[h];
        const ModPoly* red = nullptr;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            const ModTerm& gl = g.lead();
            if (gl.pos == lt.pos && gl.mon.divides(lt.mon)) {
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
        cur = merge_sub_terms(cur, h, mod_term_mul(*red, m, c), ord);
        h = 0;
    }
    return ModPoly::from_sorted(std::move(out));
}

}  // namespace

std::vector<ModPoly> minimal_generators(const std::vector<ModPoly>& gens,
                                        const std::vector<std::int64_t>& weights,
                                        const MonomialOrder& ord) {
    struct Cand {
        std::size_t idx;
        std::int64_t deg;
    };
    auto mdeg_of = [&](const ModPoly& g) {
        return g.lead().mon.total_degree() + weights[g.lead().pos];
    };
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (!gens[i].is_zero()) cands.push_back(Cand{i, mdeg_of(gens[i])});
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        return a.deg != b.deg ? a.deg < b.deg : a.idx < b.idx;
    });

    struct Pending {
        int i, j;
        std::int64_t deg;
    };
    std::vector<ModPoly> kept;
    std::vector<ModPoly> gb;
    std::vector<Pending> pending;

    auto add_to_gb = [&](ModPoly g) {
        g = mod_monic(std::move(g));
        int t = static_cast<int>(gb.size());
        const ModTerm& lt = g.lead();
        for (int i = 0; i < t; ++i) {
            const ModTerm& li = gb[i].lead();
            if (li.pos != lt.pos) continue;
            Monomial l = lcm(li.mon, lt.mon);
            pending.push_back(Pending{i, t, l.total_degree() + weights[lt.pos]});
        }
        gb.push_back(std::move(g));
    };
    // process all pairs of module degree <= d so membership at degree d is exact
    auto complete_to = [&](std::int64_t d) {
        for (;;) {
            int best = -1;
            for (std::size_t k = 0; k < pending.size(); ++k) {
                if (pending[k].deg > d) continue;
                if (best < 0 || pending[k].deg < pending[best].deg ||
                    (pending[k].deg == pending[best].deg &&
                     (pending[k].i < pending[best].i ||
                      (pending[k].i == pending[best].i && pending[k].j < pending[best].j))))
                    best = static_cast<int>(k);
            }
            if (best < 0) return;
            Pending pr = pending[best];
            pending.erase(pending.begin() + best);
            check_compute_budget(pending.size() + gb.size());
            const ModPoly& a = gb[pr.i];
            const ModPoly& b = gb[pr.j];
            const Monomial L = lcm(a.lead().mon, b.lead().mon);
            ModPoly s = mod_sub(
                mod_term_mul(a, a.lead().mon.divide(L), a.lead().coef.inverse()),
                mod_term_mul(b, b.lead().mon.divide(L), b.lead().coef.inverse()), ord);
            ModPoly r = mod_reduce(s, gb, ord);
            if (!r.is_zero()) add_to_gb(std::move(r));
        }
    };

    for (const Cand& c : cands) {
        complete_to(c.deg);
        ModPoly r = mod_reduce(gens[c.idx], gb, ord);
        if (r.is_zero()) continue;
        kept.push_back(gens[c.idx]);
        add_to_gb(std::move(r));
    }
    return kept;
}

ModDivision mod_divide(const ModPoly& f, const std::vector<ModPoly>& gb,
                       const MonomialOrder& ord) {
    std::vector<std::vector<Term>> quot(gb.size());
    std::vector<ModTerm> out;
    std::vector<ModTerm> cur = f.terms();
    std::size_t h = 0;
    while (h < cur.size()) {
        const ModTerm& lt = cur[h];
        int which = -1;
        for (std::size_t k = 0; k < gb.size(); ++k) {
            if (gb[k].is_zero()) continue;
            const ModTerm& gl = gb[k].lead();
            if (gl.pos == lt.pos && gl.mon.divides(lt.mon)) {
                which = static_cast<int>(k);
                break;
            }
        }
        if (which < 0) {
            out.push_back(lt);
            ++h;
            continue;
        }
        Scalar c = lt.coef / gb[which].lead().coef;
        Monomial m = gb[which].lead().mon.divide(lt.mon);
        quot[which].push_back(Term{m, c});
        cur = merge_sub_terms(cur, h, mod_term_mul(gb[which], m, c), ord);
        h = 0;
    }
    ModDivision d;
    d.quotients.reserve(gb.size());
    for (auto& q : quot) d.quotients.push_back(Poly::from_terms(std::move(q), ord));
    d.remainder = ModPoly::from_sorted(std::move(out));
    return d;
}

}  // namespace virtua
