#include "rrlab/oracle.hpp"

#include <algorithm>

namespace rrlab {

Vec PieceBasis::coords(const VectorPoly& v, const Field& f) const {
    Vec c(elems.size(), Scalar::zero(f));
    for (auto& t : v.terms()) {
        bool found = false;
        for (std::size_t i = 0; i < elems.size(); ++i) {
            if (elems[i].first == t.comp && elems[i].second == t.mono) {
                c[i] = t.coeff;
                found = true;
                break;
            }
        }
        if (!found) throw internal_error("piece coordinates: term of wrong degree");
    }
    return c;
}

VectorPoly PieceBasis::element(const Vec& c, const ModuleOrder& ord, const Field&) const {
    std::vector<VTerm> ts;
    for (std::size_t i = 0; i < elems.size(); ++i)
        if (!c[i].is_zero()) ts.push_back({elems[i].first, elems[i].second, c[i]});
    return VectorPoly(std::move(ts), ord);
}

OracleContext::OracleContext(RingPtr ring, std::uint32_t rank, std::vector<int> shifts, int max_degree)
    : ring_(std::move(ring)), rank_(rank), shifts_(std::move(shifts)), max_degree_(max_degree) {
    if (shifts_.empty()) shifts_.assign(rank_, 0);
    order_.base = ring_->order();
    order_.top = true;
    order_.shifts = shifts_;
}

const PieceBasis& OracleContext::piece(int e) const {
    auto it = pieces_.find(e);
    if (it != pieces_.end()) return it->second;
    PieceBasis pb;
    pb.degree = e;
    for (std::uint32_t c = 0; c < rank_; ++c) {
        int d = e - shifts_[c];
        if (d < 0) continue;
        for (auto& m : monomials_of_degree(ring_->nvars(), static_cast<std::uint32_t>(d)))
            pb.elems.emplace_back(c, m);
    }
    return pieces_.emplace(e, std::move(pb)).first->second;
}

const RowSpan& OracleContext::defining_span(int e) const {
    auto it = jspans_.find(e);
    if (it != jspans_.end()) return it->second;
    const PieceBasis& pb = piece(e);
    RowSpan span(pb.width(), ring_->field());
    for (auto& j : ring_->defining()) {
        int dj = static_cast<int>(j.degree());
        for (std::uint32_t c = 0; c < rank_; ++c) {
            int d = e - shifts_[c] - dj;
            if (d < 0) continue;
            VectorPoly base = VectorPoly::from_polynomial(j, c, order_);
            for (auto& u : monomials_of_degree(ring_->nvars(), static_cast<std::uint32_t>(d)))
                span.add(pb.coords(vp_mul_term(base, u, Scalar::one(ring_->field()), order_), ring_->field()));
        }
    }
    return jspans_.emplace(e, std::move(span)).first->second;
}

void OracleModule::require_degree(int e) const {
    if (e < lo || e > hi)
        throw algebra_error("oracle inconclusive below degree " + std::to_string(e) +
                            ": computed range is [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

int OracleModule::dim(int e) const {
    require_degree(e);
    return static_cast<int>(span.at(e).dim() - ctx->defining_span(e).dim());
}

bool OracleModule::contains(const VectorPoly& v) const {
    if (v.is_zero()) return true;
    int e = v.degree(ctx->order());
    require_degree(e);
    return span.at(e).contains(ctx->piece(e).coords(v, ctx->ring()->field()));
}

std::vector<VectorPoly> OracleModule::piece_representatives(int e) const {
    require_degree(e);
    std::vector<VectorPoly> out;
    const RowSpan& jsp = ctx->defining_span(e);
    for (auto& row : span.at(e).rows()) {
        if (jsp.contains(row)) continue;
        out.push_back(ctx->piece(e).element(row, ctx->order(), ctx->ring()->field()));
    }
    return out;
}

namespace {

OracleModule make_module(const OracleContext& ctx, int lo, int hi) {
    OracleModule m;
    m.ctx = &ctx;
    m.lo = lo;
    m.hi = hi;
    for (int e = lo; e <= hi; ++e)
        m.span.emplace(e, ctx.defining_span(e)); // start from the J*F span
    return m;
}

} // namespace

OracleModule oracle_span(const OracleContext& ctx, const std::vector<VectorPoly>& gens) {
    OracleModule m = make_module(ctx, 0, ctx.max_degree());
    const Field f = ctx.ring()->field();
    for (auto& g0 : gens) {
        if (g0.is_zero()) continue;
        VectorPoly g = vp_reorder(g0, ctx.order());
        int dg = g.degree(ctx.order());
        for (int e = std::max(dg, m.lo); e <= m.hi; ++e) {
            auto& span = m.span.at(e);
            for (auto& u : monomials_of_degree(ctx.ring()->nvars(), static_cast<std::uint32_t>(e - dg)))
                span.add(ctx.piece(e).coords(vp_mul_term(g, u, Scalar::one(f), ctx.order()), f));
        }
    }
    return m;
}

OracleModule oracle_power_span(const OracleContext& ctx, const std::vector<VectorPoly>& gens, int n) {
    if (n == 0) return oracle_span(ctx, gens);
    std::vector<VectorPoly> prods;
    const Field f = ctx.ring()->field();
    for (auto& g : gens) {
        VectorPoly gg = vp_reorder(g, ctx.order());
        for (auto& u : monomials_of_degree(ctx.ring()->nvars(), static_cast<std::uint32_t>(n)))
            prods.push_back(vp_mul_term(gg, u, Scalar::one(f), ctx.order()));
    }
    return oracle_span(ctx, prods);
}

namespace {

// Solves { v in M_e : (condition maps applied to v) land in the target spans }
// degreewise. conditions: list of (multiplier monomial-or-poly as VectorPoly
// transformer) realized concretely below for the two callers.
OracleModule colon_core(const OracleContext& ctx, const OracleModule& N,
                        const std::vector<Polynomial>& multipliers, const OracleModule& M) {
    const Field f = ctx.ring()->field();
    int shrink = 0;
    for (auto& p : multipliers) shrink = std::max<int>(shrink, p.degree());
    int hi = std::min(M.hi, N.hi - shrink);
    OracleModule out = make_module(ctx, std::min(M.lo, 0), hi);

    for (int e = out.lo; e <= out.hi; ++e) {
        // basis of M_e
        std::vector<Vec> mbasis;
        for (auto& row : M.span.at(e).rows()) mbasis.push_back(row);
        if (mbasis.empty()) continue;

        // stack residues of p*v against N for each multiplier
        std::vector<Vec> columns(mbasis.size());
        std::size_t height = 0;
        std::vector<std::size_t> offsets;
        std::vector<int> target_deg;
        for (auto& p : multipliers) {
            int te = e + static_cast<int>(p.degree());
            offsets.push_back(height);
            target_deg.push_back(te);
            height += ctx.piece(te).width();
        }
        for (std::size_t i = 0; i < mbasis.size(); ++i) {
            VectorPoly v = ctx.piece(e).element(mbasis[i], ctx.order(), f);
            Vec stacked(height, Scalar::zero(f));
            for (std::size_t pi = 0; pi < multipliers.size(); ++pi) {
                VectorPoly pv = vp_mul_poly(v, multipliers[pi], ctx.order());
                Vec res = N.span.at(target_deg[pi]).reduce(ctx.piece(target_deg[pi]).coords(pv, f));
                for (std::size_t j = 0; j < res.size(); ++j) stacked[offsets[pi] + j] = res[j];
            }
            columns[i] = std::move(stacked);
        }
        auto kernel = kernel_basis(columns, height, f);
        auto& span = out.span.at(e);
        for (auto& kv : kernel) {
            Vec combo(ctx.piece(e).width(), Scalar::zero(f));
            for (std::size_t i = 0; i < mbasis.size(); ++i) {
                if (kv[i].is_zero()) continue;
                for (std::size_t j = 0; j < combo.size(); ++j) combo[j] += kv[i] * mbasis[i][j];
            }
            span.add(std::move(combo));
        }
    }
    return out;
}

} // namespace

OracleModule oracle_colon_elem(const OracleContext& ctx, const OracleModule& N, const Polynomial& f,
                               const OracleModule& M) {
    if (f.is_zero()) {
        OracleModule out = make_module(ctx, M.lo, M.hi);
        for (int e = out.lo; e <= out.hi; ++e) out.span.at(e) = M.span.at(e);
        return out;
    }
    return colon_core(ctx, N, {f}, M);
}

OracleModule oracle_colon_ideal(const OracleContext& ctx, const OracleModule& N,
                                const std::vector<Polynomial>& ideal_gens, const OracleModule& M) {
    std::vector<Polynomial> mult;
    for (auto& g : ideal_gens)
        if (!g.is_zero()) mult.push_back(g);
    if (mult.empty()) {
        OracleModule out = make_module(ctx, M.lo, M.hi);
        for (int e = out.lo; e <= out.hi; ++e) out.span.at(e) = M.span.at(e);
        return out;
    }
    return colon_core(ctx, N, mult, M);
}

OracleModule oracle_colon_irrelevant_power(const OracleContext& ctx, const OracleModule& N, int k,
                                           const OracleModule& M) {
    std::vector<Polynomial> mult;
    const Field f = ctx.ring()->field();
    for (auto& u : monomials_of_degree(ctx.ring()->nvars(), static_cast<std::uint32_t>(k)))
        mult.push_back(Polynomial::term(u, Scalar::one(f), ctx.ring()->order()));
    return colon_core(ctx, N, mult, M);
}

OracleModule oracle_intersect(const OracleContext& ctx, const OracleModule& A, const OracleModule& B) {
    const Field f = ctx.ring()->field();
    OracleModule out = make_module(ctx, std::max(A.lo, B.lo), std::min(A.hi, B.hi));
    for (int e = out.lo; e <= out.hi; ++e) {
        const auto& ra = A.span.at(e).rows();
        const auto& rb = B.span.at(e).rows();
        std::vector<Vec> columns;
        for (auto& r : ra) columns.push_back(r);
        for (auto& r : rb) {
            Vec neg(r.size(), Scalar::zero(f));
            for (std::size_t j = 0; j < r.size(); ++j) neg[j] = -r[j];
            columns.push_back(std::move(neg));
        }
        auto kernel = kernel_basis(columns, ctx.piece(e).width(), f);
        auto& span = out.span.at(e);
        for (auto& kv : kernel) {
            Vec combo(ctx.piece(e).width(), Scalar::zero(f));
            for (std::size_t i = 0; i < ra.size(); ++i) {
                if (kv[i].is_zero()) continue;
                for (std::size_t j = 0; j < combo.size(); ++j) combo[j] += kv[i] * ra[i][j];
            }
            span.add(std::move(combo));
        }
    }
    return out;
}

OracleRRChain oracle_rr_chain(const OracleContext& ctx, const std::vector<VectorPoly>& gens, int n, int kmax,
                              int window) {
    OracleRRChain chain;
    OracleModule mod = oracle_span(ctx, gens);
    int hi = ctx.max_degree() - kmax;
    int consecutive = 0;
    for (int k = 1; k <= kmax; ++k) {
        OracleModule power = oracle_power_span(ctx, gens, n + k);
        OracleModule tk = oracle_colon_irrelevant_power(ctx, power, k, mod);
        // clamp to the common comparison range
        tk.hi = std::min(tk.hi, hi);
        if (!chain.stages.empty()) {
            bool same = true;
            const OracleModule& prev = chain.stages.back();
            for (int e = tk.lo; e <= hi && same; ++e) {
                if (prev.span.at(e).dim() != tk.span.at(e).dim()) same = false;
            }
            consecutive = same ? consecutive + 1 : 0;
        }
        chain.stages.push_back(std::move(tk));
        if (consecutive >= window) { chain.stabilized = true; break; }
    }
    // union of the chain is the last stage (the chain is increasing)
    chain.closure = chain.stages.back();
    return chain;
}

bool oracle_agrees(const Submodule& engine_result, const OracleModule& oracle_result, int D) {
    oracle_result.require_degree(std::min(D, oracle_result.hi));
    if (D > oracle_result.hi)
        throw algebra_error("oracle inconclusive: requested degree " + std::to_string(D) +
                            " beyond computed bound " + std::to_string(oracle_result.hi));
    for (int e = oracle_result.lo; e <= D; ++e) {
        if (engine_result.graded_dim(e) != oracle_result.dim(e)) return false;
        for (auto& rep : oracle_result.piece_representatives(e))
            if (!engine_result.contains(rep)) return false;
    }
    for (auto& g : engine_result.gens()) {
        int e = g.degree(engine_result.order());
        if (e >= oracle_result.lo && e <= D && !oracle_result.contains(g)) return false;
    }
    return true;
}

} // namespace rrlab
