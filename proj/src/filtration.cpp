#include "rrlab/filtration.hpp"

#include <algorithm>
#include <sstream>

namespace rrlab {

namespace {

std::string poly_str(const Polynomial& f, const RingPtr& R) { return f.str(R->var_names()); }

Polynomial linear_form_from_coeffs(const RingPtr& R, const std::vector<long>& coeffs) {
    std::vector<PTerm> ts;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        ts.push_back({Monomial::variable(R->nvars(), i), Scalar::of(R->field(), coeffs[i])});
    }
    return Polynomial(std::move(ts), R->order());
}

} // namespace

FilteredModule::FilteredModule(Submodule M, LabConfig cfg) : M_(std::move(M)), cfg_(cfg) {
    powers_.push_back(M_);
}

const Submodule& FilteredModule::power(int n) {
    if (n < 0) throw algebra_error("negative filtration index");
    Submodule m = Submodule::irrelevant(ring());
    while (static_cast<int>(powers_.size()) <= n)
        powers_.push_back(mult_ideal(m, powers_.back()));
    return powers_[n];
}

int FilteredModule::depth() {
    if (!depth_) depth_ = module_depth(M_);
    return *depth_;
}

const SuperficialWitness& FilteredModule::witness() {
    if (!witness_) witness_ = find_superficial(*this);
    return *witness_;
}

const AssocGraded& FilteredModule::graded() {
    if (!graded_) graded_ = assoc_graded(*this);
    return *graded_;
}

int FilteredModule::regularity() {
    if (!reg_) {
        const AssocGraded& g = graded();
        QuotientModule q;
        q.ring = g.P;
        q.rank = static_cast<std::uint32_t>(g.num_gens);
        q.shifts.assign(g.num_gens, 0);
        q.relations = g.relations;
        reg_ = regularity_quotient(q);
    }
    return *reg_;
}

int AssocGraded::piece_dim(int n) const {
    if (n < 0) return 0;
    int ambient = static_cast<int>(monomials_of_degree(P->nvars(), static_cast<std::uint32_t>(n)).size());
    return num_gens * ambient - relations.graded_dim(n);
}

AssocGraded assoc_graded(FilteredModule& Mf) {
    const Submodule& M = Mf.module();
    const RingPtr& R = M.ring();
    const std::size_t d = R->nvars();
    const Field field = R->field();

    std::vector<VectorPoly> mg = min_gens(M);
    const std::size_t s = mg.size();

    AssocGraded g;
    std::vector<std::string> ynames;
    for (std::size_t i = 0; i < d; ++i) ynames.push_back("y" + std::to_string(i + 1));
    g.P = GradedRing::make(field, ynames);
    g.num_gens = static_cast<int>(s);
    for (auto& v : mg) g.internal_degrees.push_back(v.degree(M.order()));

    if (s == 0) {
        g.relations = Submodule::zero(g.P, 0, {});
        return g;
    }

    // Rees presentation inside T = k[t, x_1..x_d, y_1..y_d]
    const std::size_t nt = 2 * d + 1;
    ModuleOrder tord;
    tord.base = MonomialOrder::elimination(1);
    tord.top = true;
    tord.shifts = g.internal_degrees;

    auto lift_x = [&](const Monomial& m) {
        std::vector<std::uint32_t> e(nt, 0);
        for (std::size_t i = 0; i < d; ++i) e[1 + i] = m[i];
        return Monomial(std::move(e));
    };

    std::vector<VectorPoly> inputs;
    for (std::size_t j = 0; j < s; ++j) {
        for (std::size_t i = 0; i < d; ++i) {
            std::vector<std::uint32_t> ye(nt, 0), xte(nt, 0);
            ye[1 + d + i] = 1;
            xte[0] = 1;
            xte[1 + i] = 1;
            inputs.push_back(VectorPoly({VTerm{static_cast<std::uint32_t>(j), Monomial(ye), Scalar::one(field)},
                                         VTerm{static_cast<std::uint32_t>(j), Monomial(xte), -Scalar::one(field)}},
                                        tord));
        }
    }
    for (auto& sz : syzygies_over(R, mg, M.rank(), M.shifts())) {
        std::vector<VTerm> ts;
        for (auto& t : sz.terms()) ts.push_back({t.comp, lift_x(t.mono), t.coeff});
        inputs.push_back(VectorPoly(std::move(ts), tord));
    }

    GroebnerBasis gb = buchberger(inputs, tord, static_cast<std::uint32_t>(s));

    // keep t-free elements, then set the x-variables to zero
    std::vector<VectorPoly> rel;
    ModuleOrder pord;
    pord.base = g.P->order();
    pord.top = true;
    pord.shifts.assign(s, 0);
    for (auto& e : gb.elems) {
        bool tfree = true;
        for (auto& t : e.terms())
            if (t.mono[0] != 0) { tfree = false; break; }
        if (!tfree) continue;
        std::vector<VTerm> ts;
        for (auto& t : e.terms()) {
            bool xfree = true;
            for (std::size_t i = 0; i < d && xfree; ++i)
                if (t.mono[1 + i] != 0) xfree = false;
            if (!xfree) continue;
            std::vector<std::uint32_t> ye(d, 0);
            for (std::size_t i = 0; i < d; ++i) ye[i] = t.mono[1 + d + i];
            ts.push_back({t.comp, Monomial(std::move(ye)), t.coeff});
        }
        VectorPoly v(std::move(ts), pord);
        if (!v.is_zero()) rel.push_back(std::move(v));
    }
    std::vector<int> zero_shifts(s, 0);
    g.relations = Submodule(g.P, static_cast<std::uint32_t>(s), zero_shifts, std::move(rel)).trimmed();

    // the filtration grading must forget the internal grading homogeneously
    for (auto& v : g.relations.gens())
        if (!v.is_homogeneous(g.relations.order()))
            throw internal_error("associated graded relations are not filtration-homogeneous");

    // Hilbert cross-check against the power filtration
    for (int n = 0; n <= Mf.config().hilbert_check; ++n) {
        int lhs = g.piece_dim(n);
        auto fl = try_finite_length(Mf.power(n), Mf.power(n + 1), Mf.config().power_bound);
        if (!fl) throw internal_error("associated graded cross-check: power quotient not finite length");
        if (lhs != fl->dim) {
            std::ostringstream os;
            os << "associated graded Hilbert cross-check failed at filtration degree " << n << ": presentation gives "
               << lhs << ", power filtration gives " << fl->dim;
            throw internal_error(os.str());
        }
    }
    return g;
}

std::optional<SuperficialWitness> superficial_certificate(FilteredModule& Mf, const Polynomial& linear_form) {
    const RingPtr& R = Mf.ring();
    Polynomial x = R->reduce(linear_form);
    if (x.is_zero() || x.degree() != 1 || !x.is_homogeneous()) return std::nullopt;

    const AssocGraded& g = Mf.graded();
    // initial form of the linear form inside P
    std::vector<PTerm> ts;
    for (auto& t : x.terms()) {
        for (std::size_t i = 0; i < R->nvars(); ++i) {
            if (t.mono[i] == 1) {
                ts.push_back({Monomial::variable(g.P->nvars(), i), t.coeff});
                break;
            }
        }
    }
    Polynomial xstar(std::move(ts), g.P->order());

    Submodule free = Submodule::free_module(g.P, static_cast<std::uint32_t>(g.num_gens),
                                            std::vector<int>(g.num_gens, 0));
    Submodule colon = colon_elem(g.relations, xstar, free);
    int dim = quotient_krull_dim(colon, g.relations);
    if (dim > 0) return std::nullopt;

    SuperficialWitness w;
    w.form = x;
    if (dim >= 0) {
        auto fl = try_finite_length(colon, g.relations, Mf.config().power_bound);
        if (!fl) throw internal_error("superficial certificate: finite length not certified despite dimension 0");
        w.annihilator_dim = fl->dim;
        w.annihilator_hilbert = fl->hilbert;
    }
    return w;
}

SuperficialWitness find_superficial(FilteredModule& Mf) {
    const RingPtr& R = Mf.ring();
    const LabConfig& cfg = Mf.config();
    if (R->field().is_prime_field() && R->field().characteristic() <= cfg.prime_floor)
        throw algebra_error("superficial search needs the rationals or a prime field larger than " +
                            std::to_string(cfg.prime_floor));

    CoeffStream cs(cfg.seed);
    std::vector<std::string> tried;
    for (int attempt = 0; attempt < cfg.attempts; ++attempt) {
        std::vector<long> coeffs(R->nvars());
        bool all_zero = true;
        for (auto& c : coeffs) {
            c = cs.next();
            if (c != 0) all_zero = false;
        }
        if (all_zero) continue;
        Polynomial x = linear_form_from_coeffs(R, coeffs);
        if (auto w = superficial_certificate(Mf, x)) return *w;
        tried.push_back(poly_str(x, R));
    }
    std::ostringstream os;
    os << "no superficial element found after " << cfg.attempts << " attempts; tried:";
    for (auto& t : tried) os << " " << t << ";";
    throw algebra_error(os.str());
}

Submodule FilteredModule::ratliff_rush(int n) {
    if (n < 0) throw algebra_error("negative filtration index");
    if (n == 0) return M_;
    auto it = rr_.find(n);
    if (it != rr_.end()) return it->second;
    if (depth() <= 0)
        throw algebra_error("depth M = 0: the Ratliff-Rush filtration properties are unavailable");

    int B = regularity();
    Submodule result = power(std::max(n, 0));
    if (n < B) {
        const Polynomial& x = witness().form;
        result = power(B);
        for (int k = 0; k < B - n; ++k) result = colon_elem(result, x, M_);
    } else {
        result = power(n);
    }
    rr_.emplace(n, result);
    return result;
}

Submodule FilteredModule::ratliff_rush_chain(int n, bool* stabilized) {
    if (n < 0) throw algebra_error("negative filtration index");
    if (stabilized) *stabilized = false;
    Submodule m = Submodule::irrelevant(ring());
    Submodule prev;
    int consecutive = 0;
    const int cap = cfg_.power_bound;
    for (int k = 1; k <= cap; ++k) {
        Submodule tk = colon_ideal(power(n + k), Submodule::irrelevant_power(ring(), k), M_);
        if (k > 1) {
            if (tk.equals(prev)) ++consecutive;
            else consecutive = 0;
        }
        prev = std::move(tk);
        if (consecutive >= cfg_.chain_window) {
            if (stabilized) *stabilized = true;
            return prev;
        }
    }
    return prev;
}

RRReport FilteredModule::rho_report() {
    if (rho_) return *rho_;
    if (depth() <= 0)
        throw algebra_error("depth M = 0: the Ratliff-Rush filtration properties are unavailable");
    RRReport rep;
    rep.reg_bound = regularity();
    rep.mode = "certified-via-reg-bound";
    rep.witness = rep.reg_bound > 0 ? witness().form : Polynomial::zero();
    for (int n = 0; n <= rep.reg_bound; ++n) {
        RRStage st;
        st.n = n;
        st.power = power(n);
        st.closure = ratliff_rush(n);
        st.equal = st.power.equals(st.closure);
        st.colon_exponent = (n >= 1 && n < rep.reg_bound) ? rep.reg_bound - n : 0;
        rep.stages.push_back(std::move(st));
    }
    rep.rho = 0;
    for (int n = rep.reg_bound; n >= 0; --n) {
        if (!rep.stages[n].equal) { rep.rho = n + 1; break; }
    }
    rho_ = rep;
    return rep;
}

bool FilteredModule::depth_graded_positive() {
    if (depth() <= 0)
        throw algebra_error("depth M = 0: the Ratliff-Rush filtration properties are unavailable");
    return rho_report().rho == 0;
}

MFullWitnessReport is_m_full(const Submodule& N, const Submodule& M, FilteredModule* ambient_for_witness,
                             const std::optional<Polynomial>& given, const LabConfig& cfg) {
    if (!M.contains_all(N)) throw algebra_error("m-full test: N is not contained in M");
    const RingPtr& R = N.ring();
    Submodule m = Submodule::irrelevant(R);
    Submodule mN = mult_ideal(m, N);

    MFullWitnessReport rep;
    auto test = [&](const Polynomial& x) {
        Polynomial xr = R->reduce(x);
        if (xr.is_zero()) return false;
        Submodule colon = colon_elem(mN, xr, M);
        if (colon.equals(N)) {
            rep.m_full = true;
            rep.exact = true;
            rep.witness = xr;
            return true;
        }
        rep.failures.emplace_back(xr, colon);
        return false;
    };

    if (given) {
        test(*given);
        return rep; // a user-supplied witness is a direct test, no search
    }
    if (ambient_for_witness) {
        try {
            if (test(ambient_for_witness->witness().form)) return rep;
        } catch (const algebra_error&) {
            // witness search can fail on degenerate inputs; fall through to random forms
        }
    }
    CoeffStream cs(cfg.seed + 1);
    for (int attempt = 0; attempt < cfg.attempts; ++attempt) {
        std::vector<long> coeffs(R->nvars());
        bool all_zero = true;
        for (auto& c : coeffs) {
            c = cs.next();
            if (c != 0) all_zero = false;
        }
        if (all_zero) continue;
        if (test(linear_form_from_coeffs(R, coeffs))) return rep;
    }
    rep.m_full = false;
    rep.exact = false; // finitely many witnesses tried
    return rep;
}

namespace {

struct PieceSolver {
    const OracleContext& ctx;
    const Field field;

    // columns spanning the degree-e piece of the span of `gens` (+ J F)
    std::vector<Vec> spanning_columns(const std::vector<VectorPoly>& gens, const ModuleOrder& ord, int e,
                                      std::vector<int>* col_owner = nullptr,
                                      std::vector<bool>* col_is_unit_mono = nullptr) const {
        std::vector<Vec> cols;
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            const VectorPoly& g = gens[gi];
            if (g.is_zero()) continue;
            int dg = g.degree(ord);
            if (dg > e) continue;
            for (auto& u : monomials_of_degree(ctx.ring()->nvars(), static_cast<std::uint32_t>(e - dg))) {
                cols.push_back(ctx.piece(e).coords(vp_mul_term(g, u, Scalar::one(field), ord), field));
                if (col_owner) col_owner->push_back(static_cast<int>(gi));
                if (col_is_unit_mono) col_is_unit_mono->push_back(u.is_one());
            }
        }
        for (auto& row : ctx.defining_span(e).rows()) {
            cols.push_back(row);
            if (col_owner) col_owner->push_back(-1);
            if (col_is_unit_mono) col_is_unit_mono->push_back(false);
        }
        return cols;
    }
};

} // namespace

MFullSplitReport mfull_split(const Submodule& N, const Submodule& M, const Polynomial& x,
                             const LabConfig& cfg) {
    const RingPtr& R = N.ring();
    Polynomial xr = R->reduce(x);
    Submodule m = Submodule::irrelevant(R);
    Submodule mN = mult_ideal(m, N);
    if (!colon_elem(mN, xr, M).equals(N))
        throw algebra_error("x is not an m-full witness for N");

    MFullSplitReport rep;
    rep.witness = xr;
    rep.colon_x = colon_elem(N, xr, M);
    rep.colon_m = colon_ideal(N, m, M);
    rep.colon_equal = rep.colon_x.equals(rep.colon_m);

    const Submodule& C = rep.colon_m;
    int max_deg = std::max({N.is_zero() ? 0 : N.max_gen_degree(),
                            C.is_zero() ? 0 : C.max_gen_degree() + 1, 2}) + 4;
    OracleContext ctx(R, N.rank(), N.shifts(), max_deg);
    const Field field = R->field();

    // socle basis: independent generator classes of (N : m)/N
    {
        std::vector<VectorPoly> cgens = C.gens();
        std::stable_sort(cgens.begin(), cgens.end(), [&](const VectorPoly& a, const VectorPoly& b) {
            return a.degree(C.order()) < b.degree(C.order());
        });
        std::map<int, RowSpan> spans;
        for (auto& c : cgens) {
            VectorPoly res = N.reduce(c);
            if (res.is_zero()) continue;
            int e = c.degree(C.order());
            auto [it, fresh] = spans.try_emplace(e, ctx.piece(e).width(), field);
            (void)fresh;
            if (it->second.add(ctx.piece(e).coords(res, field))) rep.socle_basis.push_back(c);
        }
    }
    rep.socle_dim = static_cast<int>(rep.socle_basis.size());
    {
        auto fl = try_finite_length(C, N, cfg.power_bound);
        if (!fl || fl->dim != rep.socle_dim)
            throw internal_error("socle dimension disagrees with the finite-length computation");
    }

    // x p_i must extend to a minimal basis of N
    Submodule xN = mult_ideal(Submodule::ideal(R, {xr}), N);
    std::vector<VectorPoly> xp;
    for (auto& p : rep.socle_basis) xp.push_back(vp_mul_poly(p, xr, N.order()));

    std::map<int, RowSpan> nakayama; // residues modulo mN
    bool independent = true;
    for (auto& v : xp) {
        VectorPoly res = mN.reduce(v);
        int e = v.degree(N.order());
        auto [it, fresh] = nakayama.try_emplace(e, ctx.piece(e).width(), field);
        (void)fresh;
        if (res.is_zero() || !it->second.add(ctx.piece(e).coords(res, field))) {
            independent = false;
            break;
        }
    }
    if (!independent) throw internal_error("x * socle basis is not part of a minimal basis of N");

    std::vector<VectorPoly> mg = min_gens(N);
    std::stable_sort(mg.begin(), mg.end(), [&](const VectorPoly& a, const VectorPoly& b) {
        return a.degree(N.order()) < b.degree(N.order());
    });
    for (auto& gpoly : mg) {
        VectorPoly res = mN.reduce(gpoly);
        if (res.is_zero()) continue;
        int e = gpoly.degree(N.order());
        auto [it, fresh] = nakayama.try_emplace(e, ctx.piece(e).width(), field);
        (void)fresh;
        if (it->second.add(ctx.piece(e).coords(res, field))) rep.completion.push_back(gpoly);
    }
    {
        auto fl = try_finite_length(N, mN, cfg.power_bound);
        if (!fl || fl->dim != rep.socle_dim + static_cast<int>(rep.completion.size()))
            throw internal_error("minimal basis completion has the wrong cardinality");
    }

    if (rep.socle_dim == 0) {
        rep.split_identity = true; // empty basis case
        return rep;
    }

    // lift bases of the relevant graded pieces of N/xN
    std::vector<int> psi_degrees;
    for (auto& v : xp) psi_degrees.push_back(v.degree(N.order()));
    std::vector<int> degrees_sorted = psi_degrees;
    std::sort(degrees_sorted.begin(), degrees_sorted.end());
    degrees_sorted.erase(std::unique(degrees_sorted.begin(), degrees_sorted.end()), degrees_sorted.end());

    std::map<int, RowSpan> xn_spans;
    std::map<int, std::vector<std::size_t>> piece_members; // degree -> indices into nxn_basis
    for (int e : degrees_sorted) {
        RowSpan span(ctx.piece(e).width(), field);
        for (auto& g : N.gens()) {
            int dg = g.degree(N.order());
            if (dg > e) continue;
            for (auto& u : monomials_of_degree(R->nvars(), static_cast<std::uint32_t>(e - dg))) {
                VectorPoly v = vp_mul_term(g, u, Scalar::one(field), N.order());
                VectorPoly res = xN.reduce(v);
                if (res.is_zero()) continue;
                if (span.add(ctx.piece(e).coords(res, field))) {
                    piece_members[e].push_back(rep.nxn_basis.size());
                    rep.nxn_basis.push_back(v);
                    rep.nxn_degrees.push_back(e);
                }
            }
        }
        xn_spans.emplace(e, std::move(span));
    }

    const std::size_t combined = rep.nxn_basis.size();
    const int l = rep.socle_dim;

    // psi columns: the class of x p_i in the lift basis of its degree
    rep.psi_cols.assign(l, Vec(combined, Scalar::zero(field)));
    for (int i = 0; i < l; ++i) {
        int e = psi_degrees[i];
        const auto& members = piece_members[e];
        std::vector<Vec> cols;
        for (auto idx : members)
            cols.push_back(ctx.piece(e).coords(xN.reduce(rep.nxn_basis[idx]), field));
        Vec target = ctx.piece(e).coords(xN.reduce(xp[i]), field);
        auto sol = solve_columns(cols, target, ctx.piece(e).width(), field);
        if (!sol) throw internal_error("psi: class of x p_i missing from the lift basis");
        for (std::size_t k = 0; k < members.size(); ++k) rep.psi_cols[i][members[k]] = (*sol)[k];
    }

    // phibar on each lift basis element: express in the minimal basis and read
    // the constant coefficients on the x p_i block
    PieceSolver solver{ctx, field};
    std::vector<VectorPoly> basis_xp_z = xp;
    for (auto& z : rep.completion) basis_xp_z.push_back(z);

    auto express_w_coords = [&](const VectorPoly& v, bool permuted) -> std::optional<Vec> {
        int e = v.degree(N.order());
        std::vector<int> owner;
        std::vector<bool> unit;
        auto cols = solver.spanning_columns(basis_xp_z, N.order(), e, &owner, &unit);
        std::optional<Vec> sol;
        if (permuted) {
            std::vector<std::size_t> perm(cols.size());
            for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = cols.size() - 1 - k;
            sol = solve_columns(cols, ctx.piece(e).coords(v, field), ctx.piece(e).width(), field, &perm);
        } else {
            sol = solve_columns(cols, ctx.piece(e).coords(v, field), ctx.piece(e).width(), field);
        }
        if (!sol) return std::nullopt;
        Vec w(l, Scalar::zero(field));
        for (std::size_t k = 0; k < cols.size(); ++k) {
            if (owner[k] >= 0 && owner[k] < l && unit[k]) w[owner[k]] += (*sol)[k];
        }
        return w;
    };

    rep.phibar_cols.assign(combined, Vec(l, Scalar::zero(field)));
    for (std::size_t b = 0; b < combined; ++b) {
        auto w = express_w_coords(rep.nxn_basis[b], false);
        if (!w) throw internal_error("phibar: lift basis element is not in N");
        rep.phibar_cols[b] = *w;
    }

    // identity check: phibar(psi(p_i)) = e_i
    rep.split_identity = true;
    for (int i = 0; i < l && rep.split_identity; ++i) {
        Vec acc(l, Scalar::zero(field));
        for (std::size_t b = 0; b < combined; ++b) {
            if (rep.psi_cols[i][b].is_zero()) continue;
            for (int r = 0; r < l; ++r) acc[r] += rep.psi_cols[i][b] * rep.phibar_cols[b][r];
        }
        for (int r = 0; r < l; ++r) {
            bool want_one = (r == i);
            if (acc[r].is_one() != want_one || (!want_one && !acc[r].is_zero())) {
                rep.split_identity = false;
                break;
            }
        }
    }

    // well-definedness spot checks: two expressions of random elements of N
    CoeffStream cs(cfg.seed + 7);
    int lo = N.min_gen_degree();
    for (int check = 0; check < 20; ++check) {
        int e = lo + static_cast<int>(std::abs(cs.next())) % 4;
        std::vector<VTerm> ts;
        for (auto& g : N.gens()) {
            int dg = g.degree(N.order());
            if (dg > e) continue;
            for (auto& u : monomials_of_degree(R->nvars(), static_cast<std::uint32_t>(e - dg))) {
                long c = cs.next();
                if (c == 0) continue;
                VectorPoly part = vp_mul_term(g, u, Scalar::of(field, c), N.order());
                for (auto& t : part.terms()) ts.push_back(t);
            }
        }
        VectorPoly t(std::move(ts), N.order());
        if (t.is_zero()) continue;
        ++rep.well_defined_checks;
        auto w1 = express_w_coords(t, false);
        auto w2 = express_w_coords(t, true);
        if (!w1 || !w2 || *w1 != *w2) {
            rep.well_defined_ok = false;
            break;
        }
    }
    return rep;
}

} // namespace rrlab
