#include "rrlab/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace rrlab {

EngineOptions& engine_options() {
    static EngineOptions opts;
    return opts;
}

namespace {

std::int64_t element_sugar(const VectorPoly& v, const ModuleOrder& ord) {
    std::int64_t s = 0;
    for (auto& t : v.terms()) s = std::max<std::int64_t>(s, ord.shifted_degree(t));
    return s;
}

struct Reduction {
    VectorPoly remainder;
    std::vector<std::pair<std::size_t, Polynomial>> used; // basis index -> quotient
    std::int64_t sugar;
};

// Full division of v by the basis, tracking quotients and the sugar degree.
Reduction reduce_full(const VectorPoly& v, const std::vector<VectorPoly>& basis, const ModuleOrder& ord,
                      std::int64_t sugar) {
    Reduction out;
    out.sugar = sugar;
    std::vector<Polynomial> quots(basis.size());
    VectorPoly h = v;
    std::vector<VTerm> rem;
    while (!h.is_zero()) {
        const VTerm& lt = h.leading_term();
        bool divided = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (basis[k].is_zero()) continue;
            const VTerm& bt = basis[k].leading_term();
            if (bt.comp != lt.comp || !bt.mono.divides(lt.mono)) continue;
            Monomial q = lt.mono.quotient_by(bt.mono);
            Scalar c = lt.coeff / bt.coeff;
            h = vp_sub(h, vp_mul_term(basis[k], q, c, ord), ord);
            quots[k] = poly_add(quots[k], Polynomial::term(q, c, ord.base), ord.base);
            out.sugar = std::max(out.sugar,
                                 element_sugar(basis[k], ord) + static_cast<std::int64_t>(q.degree()));
            divided = true;
            break;
        }
        if (!divided) {
            rem.push_back(lt);
            h = vp_sub(h, VectorPoly({lt}, ord), ord);
        }
    }
    out.remainder = VectorPoly(std::move(rem), ord);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (!quots[k].is_zero()) out.used.emplace_back(k, std::move(quots[k]));
    return out;
}

struct CriticalPair {
    std::size_t i, j;
    std::int64_t sugar;
    std::uint32_t lcm_deg;
    Monomial lcm;
};

struct BasisState {
    std::vector<VectorPoly> g;
    std::vector<std::int64_t> sugar;
    std::vector<std::vector<Polynomial>> rep; // g[i] = sum rep[i][j] * input[j]; empty when not tracked
    bool track = false;
    std::size_t ninputs = 0;
};

void scale_rep(std::vector<Polynomial>& rep, const Scalar& c, const MonomialOrder& mo) {
    for (auto& p : rep) p = poly_scale(p, c, mo);
}

// Gebauer-Moller style pair update; the product criterion applies only in
// rank one, where the module is an honest ideal.
void update_pairs(BasisState& st, std::vector<CriticalPair>& pairs, VectorPoly h, std::int64_t h_sugar,
                  std::vector<Polynomial> h_rep, std::uint32_t rank) {
    const std::size_t new_idx = st.g.size();
    const VTerm& lt_h = h.leading_term();

    std::vector<CriticalPair> fresh;
    for (std::size_t k = 0; k < st.g.size(); ++k) {
        if (st.g[k].is_zero()) continue;
        const VTerm& lt_k = st.g[k].leading_term();
        if (lt_k.comp != lt_h.comp) continue;
        Monomial l = Monomial::lcm(lt_k.mono, lt_h.mono);
        std::int64_t s = std::max(st.sugar[k] + static_cast<std::int64_t>(l.degree() - lt_k.mono.degree()),
                                  h_sugar + static_cast<std::int64_t>(l.degree() - lt_h.mono.degree()));
        fresh.push_back({k, new_idx, s, l.degree(), std::move(l)});
    }

    // chain criterion applied to surviving old pairs
    std::vector<CriticalPair> kept;
    kept.reserve(pairs.size());
    for (auto& cp : pairs) {
        const VTerm& li = st.g[cp.i].leading_term();
        const VTerm& lj = st.g[cp.j].leading_term();
        if (li.comp == lt_h.comp && lt_h.mono.divides(cp.lcm)) {
            Monomial lih = Monomial::lcm(li.mono, lt_h.mono);
            Monomial lhj = Monomial::lcm(lt_h.mono, lj.mono);
            if (!(lih == cp.lcm) && !(lhj == cp.lcm)) continue;
        }
        kept.push_back(std::move(cp));
    }
    pairs = std::move(kept);

    // among the fresh pairs keep only minimal lcms
    std::stable_sort(fresh.begin(), fresh.end(),
                     [](const CriticalPair& a, const CriticalPair& b) { return a.lcm_deg < b.lcm_deg; });
    std::vector<CriticalPair> minimal;
    for (auto& p : fresh) {
        bool redundant = false;
        for (auto& q : minimal) {
            if (q.lcm.divides(p.lcm)) { redundant = true; break; }
        }
        if (!redundant) minimal.push_back(std::move(p));
    }

    if (rank == 1) {
        std::vector<CriticalPair> surviving;
        for (auto& p : minimal) {
            Monomial g = Monomial::gcd(st.g[p.i].leading_term().mono, lt_h.mono);
            if (g.degree() != 0) surviving.push_back(std::move(p));
        }
        minimal = std::move(surviving);
    }

    st.g.push_back(std::move(h));
    st.sugar.push_back(h_sugar);
    if (st.track) st.rep.push_back(std::move(h_rep));
    for (auto& p : minimal) pairs.push_back(std::move(p));
}

void interreduce(BasisState& st, const ModuleOrder& ord) {
    // drop elements whose lead term another element divides
    for (std::size_t i = 0; i < st.g.size();) {
        bool redundant = false;
        if (!st.g[i].is_zero()) {
            const VTerm& li = st.g[i].leading_term();
            for (std::size_t j = 0; j < st.g.size(); ++j) {
                if (j == i || st.g[j].is_zero()) continue;
                const VTerm& lj = st.g[j].leading_term();
                if (lj.comp == li.comp && lj.mono.divides(li.mono) &&
                    !(j > i && lj.mono == li.mono)) {
                    redundant = true;
                    break;
                }
            }
        } else {
            redundant = true;
        }
        if (redundant) {
            st.g.erase(st.g.begin() + i);
            st.sugar.erase(st.sugar.begin() + i);
            if (st.track) st.rep.erase(st.rep.begin() + i);
        } else {
            ++i;
        }
    }
    // tail-reduce every element against the others
    for (std::size_t i = 0; i < st.g.size(); ++i) {
        std::vector<VectorPoly> others;
        std::vector<std::size_t> omap;
        others.reserve(st.g.size() - 1);
        for (std::size_t j = 0; j < st.g.size(); ++j) {
            if (j != i) { others.push_back(st.g[j]); omap.push_back(j); }
        }
        Reduction red = reduce_full(st.g[i], others, ord, st.sugar[i]);
        if (st.track) {
            for (auto& [k, q] : red.used) {
                for (std::size_t jj = 0; jj < st.ninputs; ++jj)
                    st.rep[i][jj] = poly_sub(st.rep[i][jj],
                                             poly_mul(q, st.rep[omap[k]][jj], ord.base), ord.base);
            }
        }
        st.g[i] = std::move(red.remainder);
        if (!st.g[i].is_zero() && !st.g[i].leading_term().coeff.is_one()) {
            Scalar inv = st.g[i].leading_term().coeff.inverse();
            st.g[i] = vp_scale(st.g[i], inv, ord);
            if (st.track) scale_rep(st.rep[i], inv, ord.base);
        }
    }
    // deterministic ordering: descending lead terms
    std::vector<std::size_t> perm(st.g.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return ord.compare(st.g[a].leading_term(), st.g[b].leading_term()) > 0;
    });
    BasisState sorted;
    sorted.track = st.track;
    sorted.ninputs = st.ninputs;
    for (auto idx : perm) {
        sorted.g.push_back(std::move(st.g[idx]));
        sorted.sugar.push_back(st.sugar[idx]);
        if (st.track) sorted.rep.push_back(std::move(st.rep[idx]));
    }
    st = std::move(sorted);
}

BasisState buchberger_core(const std::vector<VectorPoly>& gens, const ModuleOrder& ord, std::uint32_t rank,
                           bool track) {
    BasisState st;
    st.track = track;
    st.ninputs = gens.size();
    std::vector<CriticalPair> pairs;

    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (gens[j].is_zero()) continue;
        VectorPoly h = gens[j];
        std::vector<Polynomial> rep;
        if (track) {
            rep.assign(gens.size(), Polynomial::zero());
            rep[j] = Polynomial::constant(h.leading_term().coeff.field(), 1,
                                          h.leading_term().mono.nvars(), ord.base);
        }
        Scalar lc = h.leading_term().coeff;
        if (!lc.is_one()) {
            h = vp_scale(h, lc.inverse(), ord);
            if (track) scale_rep(rep, lc.inverse(), ord.base);
        }
        update_pairs(st, pairs, std::move(h), element_sugar(gens[j], ord), std::move(rep), rank);
    }

    while (!pairs.empty()) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < pairs.size(); ++i) {
            if (pairs[i].sugar < pairs[best].sugar ||
                (pairs[i].sugar == pairs[best].sugar && pairs[i].lcm_deg < pairs[best].lcm_deg))
                best = i;
        }
        CriticalPair cp = std::move(pairs[best]);
        pairs.erase(pairs.begin() + best);

        const VectorPoly& gi = st.g[cp.i];
        const VectorPoly& gj = st.g[cp.j];
        Monomial ui = cp.lcm.quotient_by(gi.leading_term().mono);
        Monomial uj = cp.lcm.quotient_by(gj.leading_term().mono);
        Scalar one = Scalar::one(gi.leading_term().coeff.field());
        VectorPoly s = vp_sub(vp_mul_term(gi, ui, one, ord), vp_mul_term(gj, uj, one, ord), ord);
        if (s.is_zero()) continue;

        Reduction red = reduce_full(s, st.g, ord, cp.sugar);
        if (red.remainder.is_zero()) continue;

        std::vector<Polynomial> rep;
        if (track) {
            rep.assign(st.ninputs, Polynomial::zero());
            auto add_mult = [&](const std::vector<Polynomial>& src, const Polynomial& by, bool negate) {
                for (std::size_t jj = 0; jj < st.ninputs; ++jj) {
                    Polynomial p = poly_mul(by, src[jj], ord.base);
                    rep[jj] = negate ? poly_sub(rep[jj], p, ord.base) : poly_add(rep[jj], p, ord.base);
                }
            };
            add_mult(st.rep[cp.i], Polynomial::term(ui, one, ord.base), false);
            add_mult(st.rep[cp.j], Polynomial::term(uj, one, ord.base), true);
            for (auto& [k, q] : red.used) add_mult(st.rep[k], q, true);
        }
        VectorPoly h = std::move(red.remainder);
        Scalar lc = h.leading_term().coeff;
        if (!lc.is_one()) {
            h = vp_scale(h, lc.inverse(), ord);
            if (track) scale_rep(rep, lc.inverse(), ord.base);
        }
        update_pairs(st, pairs, std::move(h), red.sugar, std::move(rep), rank);
    }

    interreduce(st, ord);
    return st;
}

} // namespace

GroebnerBasis buchberger(const std::vector<VectorPoly>& gens, const ModuleOrder& ord, std::uint32_t rank) {
    BasisState st = buchberger_core(gens, ord, rank, false);
    GroebnerBasis gb{std::move(st.g), ord, rank};
    if (engine_options().self_check) verify_groebner(gb);
    return gb;
}

VectorPoly normal_form(const VectorPoly& v, const std::vector<VectorPoly>& basis, const ModuleOrder& ord) {
    return reduce_full(v, basis, ord, 0).remainder;
}

VectorPoly normal_form(const VectorPoly& v, const GroebnerBasis& gb) {
    return reduce_full(v, gb.elems, gb.order, 0).remainder;
}

NfQuotients normal_form_ext(const VectorPoly& v, const std::vector<VectorPoly>& basis, const ModuleOrder& ord) {
    Reduction red = reduce_full(v, basis, ord, 0);
    NfQuotients out;
    out.remainder = std::move(red.remainder);
    out.quotients.assign(basis.size(), Polynomial::zero());
    for (auto& [k, q] : red.used) out.quotients[k] = std::move(q);
    return out;
}

void verify_groebner(const GroebnerBasis& gb) {
    for (std::size_t i = 0; i < gb.elems.size(); ++i) {
        for (std::size_t j = i + 1; j < gb.elems.size(); ++j) {
            const VTerm& li = gb.elems[i].leading_term();
            const VTerm& lj = gb.elems[j].leading_term();
            if (li.comp != lj.comp) continue;
            Monomial l = Monomial::lcm(li.mono, lj.mono);
            Scalar one = Scalar::one(li.coeff.field());
            VectorPoly s = vp_sub(vp_mul_term(gb.elems[i], l.quotient_by(li.mono), one, gb.order),
                                  vp_mul_term(gb.elems[j], l.quotient_by(lj.mono), one, gb.order), gb.order);
            if (!normal_form(s, gb).is_zero())
                throw std::logic_error("groebner self-check failed: S-vector does not reduce to zero");
        }
    }
}

std::vector<VectorPoly> syzygies(const std::vector<VectorPoly>& gens, const ModuleOrder& ord,
                                 std::uint32_t rank) {
    const std::size_t s = gens.size();
    std::vector<VectorPoly> out;
    if (s == 0) return out;

    std::size_t nv = 0;
    Field field;
    bool have_any = false;
    for (auto& g : gens) {
        if (!g.is_zero()) {
            nv = g.leading_term().mono.nvars();
            field = g.leading_term().coeff.field();
            have_any = true;
            break;
        }
    }

    // syzygy module order: graded when the inputs are homogeneous
    ModuleOrder syz_ord;
    syz_ord.base = ord.base;
    syz_ord.top = true;
    syz_ord.shifts.assign(s, 0);
    bool homog = true;
    for (std::size_t j = 0; j < s; ++j) {
        if (gens[j].is_zero()) continue;
        if (!gens[j].is_homogeneous(ord)) homog = false;
    }
    if (homog) {
        for (std::size_t j = 0; j < s; ++j)
            syz_ord.shifts[j] = gens[j].is_zero() ? 0 : gens[j].degree(ord);
    }

    auto emit = [&](std::vector<Polynomial> coords) {
        std::vector<VTerm> ts;
        for (std::size_t j = 0; j < s; ++j)
            for (auto& t : coords[j].terms()) ts.push_back({static_cast<std::uint32_t>(j), t.mono, t.coeff});
        VectorPoly v(std::move(ts), syz_ord);
        if (!v.is_zero()) out.push_back(std::move(v));
    };

    // zero generators contribute unit syzygies
    for (std::size_t j = 0; j < s; ++j) {
        if (!gens[j].is_zero()) continue;
        if (!have_any) continue;
        std::vector<Polynomial> coords(s);
        coords[j] = Polynomial::constant(field, 1, nv, ord.base);
        emit(coords);
    }
    if (!have_any) return out;

    BasisState st = buchberger_core(gens, ord, rank, true);
    if (engine_options().self_check) verify_groebner(GroebnerBasis{st.g, ord, rank});
    const std::size_t t = st.g.size();

    // Schreyer syzygies of the reduced basis, pushed back to the inputs.
    Scalar one = Scalar::one(field);
    for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = i + 1; j < t; ++j) {
            const VTerm& li = st.g[i].leading_term();
            const VTerm& lj = st.g[j].leading_term();
            if (li.comp != lj.comp) continue;
            Monomial l = Monomial::lcm(li.mono, lj.mono);
            Monomial ui = l.quotient_by(li.mono);
            Monomial uj = l.quotient_by(lj.mono);
            VectorPoly sv = vp_sub(vp_mul_term(st.g[i], ui, one, ord), vp_mul_term(st.g[j], uj, one, ord), ord);
            Reduction red = reduce_full(sv, st.g, ord, 0);
            if (!red.remainder.is_zero())
                throw std::logic_error("syzygies: basis failed S-vector reduction");
            // sigma over the basis: ui e_i - uj e_j - sum quotients
            std::vector<Polynomial> sigma(t);
            sigma[i] = Polynomial::term(ui, one, ord.base);
            sigma[j] = poly_sub(sigma[j], Polynomial::term(uj, one, ord.base), ord.base);
            for (auto& [k, q] : red.used) sigma[k] = poly_sub(sigma[k], q, ord.base);
            std::vector<Polynomial> coords(s);
            for (std::size_t b = 0; b < t; ++b) {
                if (sigma[b].is_zero()) continue;
                for (std::size_t jj = 0; jj < s; ++jj)
                    coords[jj] = poly_add(coords[jj], poly_mul(sigma[b], st.rep[b][jj], ord.base), ord.base);
            }
            emit(std::move(coords));
        }
    }

    // identity corrections: e_j - (expression of input j through the basis)
    for (std::size_t j = 0; j < s; ++j) {
        if (gens[j].is_zero()) continue;
        Reduction red = reduce_full(gens[j], st.g, ord, 0);
        if (!red.remainder.is_zero())
            throw std::logic_error("syzygies: input does not reduce to zero against its own basis");
        std::vector<Polynomial> coords(s);
        coords[j] = Polynomial::constant(field, 1, nv, ord.base);
        for (auto& [k, q] : red.used)
            for (std::size_t jj = 0; jj < s; ++jj)
                coords[jj] = poly_sub(coords[jj], poly_mul(q, st.rep[k][jj], ord.base), ord.base);
        emit(std::move(coords));
    }

    // light deduplication
    std::vector<VectorPoly> unique;
    for (auto& v : out) {
        bool dup = false;
        for (auto& u : unique)
            if (u == v) { dup = true; break; }
        if (!dup) unique.push_back(std::move(v));
    }
    return unique;
}

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, std::size_t drop_first) {
    ModuleOrder ord;
    ord.base = MonomialOrder::elimination(drop_first);
    std::vector<VectorPoly> vgens;
    for (auto& f : gens) {
        Polynomial g = poly_reorder(f, ord.base);
        if (!g.is_zero()) vgens.push_back(VectorPoly::from_polynomial(g, 0, ord));
    }
    GroebnerBasis gb = buchberger(vgens, ord, 1);
    std::vector<Polynomial> out;
    for (auto& e : gb.elems) {
        bool free_of_dropped = true;
        for (auto& t : e.terms()) {
            for (std::size_t i = 0; i < drop_first && free_of_dropped; ++i)
                if (t.mono[i] != 0) free_of_dropped = false;
            if (!free_of_dropped) break;
        }
        if (free_of_dropped) out.push_back(e.component(0, ord.base));
    }
    return out;
}

} // namespace rrlab
