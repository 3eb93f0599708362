#include "rrlab/submodule.hpp"

#include <algorithm>

namespace rrlab {

Submodule::Submodule(RingPtr ring, std::uint32_t rank, std::vector<int> shifts, std::vector<VectorPoly> gens,
                     bool check_homogeneous)
    : ring_(std::move(ring)), rank_(rank), shifts_(std::move(shifts)) {
    if (shifts_.empty()) shifts_.assign(rank_, 0);
    if (shifts_.size() != rank_) throw algebra_error("shift vector length does not match rank");
    order_.base = ring_->order();
    order_.top = true;
    order_.shifts = shifts_;

    std::vector<VectorPoly> pad;
    for (auto& f : ring_->defining_gb().elems)
        for (std::uint32_t c = 0; c < rank_; ++c)
            pad.push_back(vp_reorder(VectorPoly::from_polynomial(f.component(0, order_.base), c, order_), order_));

    for (auto& g : gens) {
        VectorPoly v = vp_reorder(g, order_);
        if (!pad.empty()) v = normal_form(v, pad, order_);
        if (v.is_zero()) continue;
        if (check_homogeneous && !v.is_homogeneous(order_))
            throw algebra_error("submodule generator is not homogeneous");
        if (!v.leading_term().coeff.is_one())
            v = vp_scale(v, v.leading_term().coeff.inverse(), order_);
        bool dup = false;
        for (auto& h : gens_)
            if (h == v) { dup = true; break; }
        if (!dup) gens_.push_back(std::move(v));
    }
}

Submodule Submodule::zero(RingPtr ring, std::uint32_t rank, std::vector<int> shifts) {
    return Submodule(std::move(ring), rank, std::move(shifts), {});
}

Submodule Submodule::free_module(RingPtr ring, std::uint32_t rank, std::vector<int> shifts) {
    std::vector<VectorPoly> gens;
    ModuleOrder ord;
    ord.base = ring->order();
    ord.shifts = shifts;
    for (std::uint32_t c = 0; c < rank; ++c)
        gens.push_back(VectorPoly::unit(c, ring->nvars(), ring->field(), ord));
    return Submodule(std::move(ring), rank, std::move(shifts), std::move(gens));
}

Submodule Submodule::ideal(RingPtr ring, std::vector<Polynomial> gens) {
    ModuleOrder ord;
    ord.base = ring->order();
    std::vector<VectorPoly> vgens;
    for (auto& f : gens)
        vgens.push_back(VectorPoly::from_polynomial(f, 0, ord));
    return Submodule(std::move(ring), 1, {0}, std::move(vgens));
}

Submodule Submodule::irrelevant(RingPtr ring) {
    return irrelevant_power(std::move(ring), 1);
}

Submodule Submodule::irrelevant_power(RingPtr ring, std::uint32_t k) {
    ModuleOrder ord;
    ord.base = ring->order();
    std::vector<VectorPoly> gens;
    for (auto& m : monomials_of_degree(ring->nvars(), k))
        gens.push_back(VectorPoly({VTerm{0, m, Scalar::one(ring->field())}}, ord));
    return Submodule(std::move(ring), 1, {0}, std::move(gens));
}

bool Submodule::same_ambient(const Submodule& o) const {
    return ring_->var_names() == o.ring_->var_names() && ring_->field() == o.ring_->field() &&
           ring_->defining() == o.ring_->defining() && rank_ == o.rank_ && shifts_ == o.shifts_;
}

std::vector<VectorPoly> Submodule::padding() const {
    std::vector<VectorPoly> pad;
    for (auto& f : ring_->defining_gb().elems)
        for (std::uint32_t c = 0; c < rank_; ++c)
            pad.push_back(vp_reorder(VectorPoly::from_polynomial(f.component(0, order_.base), c, order_), order_));
    return pad;
}

const GroebnerBasis& Submodule::gb() const {
    if (!gb_) {
        std::vector<VectorPoly> all = gens_;
        for (auto& p : padding()) all.push_back(p);
        gb_ = std::make_shared<GroebnerBasis>(buchberger(all, order_, rank_));
    }
    return *gb_;
}

bool Submodule::contains_all(const Submodule& o) const {
    for (auto& g : o.gens())
        if (!contains(g)) return false;
    return true;
}

bool Submodule::equals(const Submodule& o) const {
    return contains_all(o) && o.contains_all(*this);
}

int Submodule::ambient_graded_dim(int e) const {
    // dimension of (S^r / J S^r)_e
    int total = 0;
    const auto& jlts = ring_->defining_gb().elems;
    for (std::uint32_t c = 0; c < rank_; ++c) {
        int d = e - shifts_[c];
        if (d < 0) continue;
        for (auto& m : monomials_of_degree(ring_->nvars(), static_cast<std::uint32_t>(d))) {
            bool in_j = false;
            for (auto& j : jlts)
                if (j.leading_term().mono.divides(m)) { in_j = true; break; }
            if (!in_j) ++total;
        }
    }
    return total;
}

int Submodule::graded_dim(int e) const {
    // dim (N + JF)_e - dim (JF)_e via the initial modules
    const auto& basis = gb().elems;
    const auto& jlts = ring_->defining_gb().elems;
    int count = 0;
    for (std::uint32_t c = 0; c < rank_; ++c) {
        int d = e - shifts_[c];
        if (d < 0) continue;
        for (auto& m : monomials_of_degree(ring_->nvars(), static_cast<std::uint32_t>(d))) {
            bool in_n = false;
            for (auto& b : basis) {
                const VTerm& lt = b.leading_term();
                if (lt.comp == c && lt.mono.divides(m)) { in_n = true; break; }
            }
            if (!in_n) continue;
            bool in_j = false;
            for (auto& j : jlts)
                if (j.leading_term().mono.divides(m)) { in_j = true; break; }
            if (!in_j) ++count;
        }
    }
    return count;
}

std::vector<int> Submodule::gen_degrees() const {
    std::vector<int> out;
    for (auto& g : gens_) out.push_back(g.degree(order_));
    return out;
}

int Submodule::min_gen_degree() const {
    int d = 0;
    bool first = true;
    for (auto& g : gens_) {
        int e = g.degree(order_);
        if (first || e < d) d = e;
        first = false;
    }
    return d;
}

int Submodule::max_gen_degree() const {
    int d = 0;
    for (auto& g : gens_) d = std::max(d, g.degree(order_));
    return d;
}

Submodule Submodule::trimmed() const {
    std::vector<VectorPoly> out;
    for (auto& e : gb().elems) out.push_back(e);
    return Submodule(ring_, rank_, shifts_, std::move(out), false);
}

std::vector<VectorPoly> syzygies_over(const RingPtr& ring, const std::vector<VectorPoly>& gens,
                                      std::uint32_t rank, const std::vector<int>& shifts) {
    ModuleOrder ord;
    ord.base = ring->order();
    ord.shifts = shifts;
    std::vector<VectorPoly> all;
    for (auto& g : gens) all.push_back(vp_reorder(g, ord));
    for (auto& f : ring->defining_gb().elems)
        for (std::uint32_t c = 0; c < rank; ++c)
            all.push_back(vp_reorder(VectorPoly::from_polynomial(f.component(0, ord.base), c, ord), ord));

    std::vector<VectorPoly> syz = syzygies(all, ord, rank);

    // project to the real block
    const std::size_t s = gens.size();
    ModuleOrder pord;
    pord.base = ring->order();
    pord.shifts.assign(s, 0);
    bool homog = true;
    for (auto& g : gens)
        if (!g.is_zero() && !vp_reorder(g, ord).is_homogeneous(ord)) homog = false;
    if (homog) {
        for (std::size_t j = 0; j < s; ++j)
            pord.shifts[j] = gens[j].is_zero() ? 0 : vp_reorder(gens[j], ord).degree(ord);
    }

    std::vector<VectorPoly> out;
    for (auto& v : syz) {
        std::vector<VTerm> ts;
        for (auto& t : v.terms())
            if (t.comp < s) ts.push_back(t);
        VectorPoly w(std::move(ts), pord);
        if (!w.is_zero()) out.push_back(std::move(w));
    }
    return out;
}

namespace {

// combine the first `count` coordinates of each syzygy against `basis`
std::vector<VectorPoly> combine_block(const std::vector<VectorPoly>& syz, const std::vector<VectorPoly>& basis,
                                      std::size_t count, const ModuleOrder& ord) {
    std::vector<VectorPoly> out;
    for (auto& v : syz) {
        VectorPoly acc;
        for (auto& t : v.terms()) {
            if (t.comp >= count) continue;
            acc = vp_add(acc, vp_mul_term(basis[t.comp], t.mono, t.coeff, ord), ord);
        }
        if (!acc.is_zero()) out.push_back(std::move(acc));
    }
    return out;
}

} // namespace

Submodule colon_elem(const Submodule& N, const Polynomial& f, const Submodule& M) {
    if (!N.same_ambient(M)) throw algebra_error("colon: ambient free modules differ");
    Polynomial g = N.ring()->reduce(f);
    if (g.is_zero()) return M;
    std::vector<VectorPoly> list;
    for (auto& m : M.gens()) list.push_back(vp_mul_poly(m, g, M.order()));
    const std::size_t a = list.size();
    for (auto& n : N.gens()) list.push_back(n);
    auto syz = syzygies_over(N.ring(), list, N.rank(), N.shifts());
    auto combos = combine_block(syz, M.gens(), a, M.order());
    return Submodule(N.ring(), N.rank(), N.shifts(), std::move(combos), false).trimmed();
}

Submodule colon_ideal(const Submodule& N, const Submodule& I, const Submodule& M) {
    if (I.rank() != 1) throw algebra_error("colon_ideal expects an ideal");
    if (I.is_zero()) return M;
    bool first = true;
    Submodule acc;
    for (auto& g : I.gens()) {
        Submodule c = colon_elem(N, g.component(0, N.ring()->order()), M);
        acc = first ? c : intersect(acc, c);
        first = false;
    }
    return acc;
}

Submodule mult_ideal(const Submodule& I, const Submodule& N) {
    if (I.rank() != 1) throw algebra_error("mult_ideal expects an ideal");
    std::vector<VectorPoly> prods;
    for (auto& f : I.gens()) {
        Polynomial p = f.component(0, N.ring()->order());
        for (auto& n : N.gens()) prods.push_back(vp_mul_poly(n, p, N.order()));
    }
    return Submodule(N.ring(), N.rank(), N.shifts(), std::move(prods), false).trimmed();
}

Submodule intersect(const Submodule& A, const Submodule& B) {
    if (!A.same_ambient(B)) throw algebra_error("intersect: ambient free modules differ");
    std::vector<VectorPoly> list = A.gens();
    const std::size_t a = list.size();
    for (auto& g : B.gens()) list.push_back(g);
    auto syz = syzygies_over(A.ring(), list, A.rank(), A.shifts());
    auto combos = combine_block(syz, A.gens(), a, A.order());
    return Submodule(A.ring(), A.rank(), A.shifts(), std::move(combos), false).trimmed();
}

Submodule sum(const Submodule& A, const Submodule& B) {
    if (!A.same_ambient(B)) throw algebra_error("sum: ambient free modules differ");
    std::vector<VectorPoly> gens = A.gens();
    for (auto& g : B.gens()) gens.push_back(g);
    return Submodule(A.ring(), A.rank(), A.shifts(), std::move(gens), false);
}

std::vector<VectorPoly> min_gens(const Submodule& N) {
    if (N.is_zero()) return {};
    Submodule mN = mult_ideal(Submodule::irrelevant(N.ring()), N);
    std::vector<VectorPoly> sorted = N.gens();
    std::stable_sort(sorted.begin(), sorted.end(), [&](const VectorPoly& x, const VectorPoly& y) {
        return x.degree(N.order()) < y.degree(N.order());
    });
    std::vector<VectorPoly> kept;
    for (auto& g : sorted) {
        std::vector<VectorPoly> basis = mN.gens();
        for (auto& k : kept) basis.push_back(k);
        Submodule test(N.ring(), N.rank(), N.shifts(), std::move(basis), false);
        if (!test.contains(g)) kept.push_back(g);
    }
    return kept;
}

Submodule annihilator_quotient(const Submodule& N1, const Submodule& N2) {
    if (!N1.same_ambient(N2)) throw algebra_error("annihilator: ambient free modules differ");
    const RingPtr& ring = N1.ring();
    bool first = true;
    Submodule acc;
    for (auto& g : N1.gens()) {
        // { f : f g in N2 } via the coefficient block of one syzygy computation
        std::vector<VectorPoly> list;
        list.push_back(g);
        for (auto& n : N2.gens()) list.push_back(n);
        auto syz = syzygies_over(ring, list, N1.rank(), N1.shifts());
        std::vector<Polynomial> coeffs;
        for (auto& v : syz) {
            Polynomial c = v.component(0, ring->order());
            if (!c.is_zero()) coeffs.push_back(c);
        }
        Submodule ideal = Submodule(ring, 1, {0}, [&] {
            ModuleOrder ord;
            ord.base = ring->order();
            std::vector<VectorPoly> vs;
            for (auto& c : coeffs) vs.push_back(VectorPoly::from_polynomial(c, 0, ord));
            return vs;
        }(), false).trimmed();
        acc = first ? ideal : intersect(acc, ideal);
        first = false;
    }
    if (first) {
        // zero module: annihilator is the unit ideal
        return Submodule::ideal(ring, {Polynomial::constant(ring->field(), 1, ring->nvars(), ring->order())});
    }
    return acc;
}

int quotient_krull_dim(const Submodule& N1, const Submodule& N2) {
    Submodule ann = annihilator_quotient(N1, N2);
    std::vector<VectorPoly> all = ann.gens();
    Submodule closed(N1.ring(), 1, {0}, std::move(all), false);
    std::vector<Monomial> lts;
    for (auto& e : closed.gb().elems) lts.push_back(e.leading_term().mono);
    return monomial_quotient_dim(N1.ring()->nvars(), lts);
}

bool is_locally_zero(const Submodule& N1, const Submodule& N2) {
    Submodule ann = annihilator_quotient(N1, N2);
    Submodule test = sum(ann, Submodule::irrelevant(N1.ring()));
    ModuleOrder ord;
    ord.base = N1.ring()->order();
    VectorPoly one = VectorPoly::unit(0, N1.ring()->nvars(), N1.ring()->field(), ord);
    return test.contains(one);
}

std::optional<FiniteLengthModule> try_finite_length(const Submodule& N1, const Submodule& N2, int power_bound) {
    if (!N1.same_ambient(N2)) throw algebra_error("finite length: ambient free modules differ");
    if (!N1.contains_all(N2)) throw algebra_error("finite length: second module is not contained in the first");
    FiniteLengthModule out;
    out.sub = N1;
    out.rel = N2;
    Submodule power = N1;
    Submodule m = Submodule::irrelevant(N1.ring());
    int c = 0;
    while (c <= power_bound) {
        if (N2.contains_all(power)) break;
        power = mult_ideal(m, power);
        ++c;
    }
    if (c > power_bound) return std::nullopt;
    out.annihilation_power = c;

    int lo = N1.is_zero() ? 0 : N1.min_gen_degree();
    int hi = (N1.is_zero() ? 0 : N1.max_gen_degree()) + c;
    out.dim = 0;
    for (int e = lo; e <= hi; ++e) {
        int d = N1.graded_dim(e) - N2.graded_dim(e);
        if (d < 0) throw internal_error("finite length: negative graded dimension");
        if (d > 0) out.hilbert[e] = d;
        out.dim += d;
    }
    return out;
}

FiniteLengthModule kdim_quotient(const Submodule& N1, const Submodule& N2, int power_bound) {
    auto r = try_finite_length(N1, N2, power_bound);
    if (!r) {
        int dim = quotient_krull_dim(N1, N2);
        if (dim > 0)
            throw algebra_error("quotient is not finite length: Krull dimension " + std::to_string(dim));
        throw algebra_error("finite length not certified within power bound " + std::to_string(power_bound));
    }
    return *r;
}

} // namespace rrlab
