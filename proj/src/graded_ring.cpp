#include "rrlab/graded_ring.hpp"

namespace rrlab {

std::shared_ptr<const GradedRing> GradedRing::make(Field field, std::vector<std::string> vars,
                                                   std::vector<Polynomial> defining) {
    auto ring = std::shared_ptr<GradedRing>(new GradedRing());
    ring->field_ = field;
    ring->vars_ = std::move(vars);

    ModuleOrder ord;
    ord.base = MonomialOrder::degrevlex();
    std::vector<VectorPoly> jvecs;
    for (auto& f : defining) {
        if (f.is_zero()) continue;
        if (!f.is_homogeneous())
            throw algebra_error("defining ideal generator is not homogeneous");
        if (f.nvars() != ring->vars_.size())
            throw algebra_error("defining ideal generator has wrong variable count");
        jvecs.push_back(VectorPoly::from_polynomial(f, 0, ord));
        ring->defining_.push_back(f);
    }
    ring->jgb_ = buchberger(jvecs, ord, 1);
    for (auto& e : ring->jgb_.elems) {
        if (e.leading_term().mono.is_one())
            throw algebra_error("defining ideal is the unit ideal");
    }
    return ring;
}

std::shared_ptr<const GradedRing> GradedRing::ambient() const {
    if (is_polynomial()) {
        // the twin must share identity semantics; rebuild lazily
        if (!ambient_) ambient_ = make(field_, vars_);
        return ambient_;
    }
    if (!ambient_) ambient_ = make(field_, vars_);
    return ambient_;
}

Polynomial GradedRing::reduce(const Polynomial& f) const {
    if (is_polynomial() || f.is_zero()) return f;
    ModuleOrder ord;
    ord.base = order();
    VectorPoly v = VectorPoly::from_polynomial(f, 0, ord);
    return normal_form(v, jgb_).component(0, order());
}

int GradedRing::krull_dim() const {
    if (!dim_) {
        std::vector<Monomial> lts;
        for (auto& e : jgb_.elems) lts.push_back(e.leading_term().mono);
        dim_ = monomial_quotient_dim(nvars(), lts);
    }
    return *dim_;
}

int monomial_quotient_dim(std::size_t nvars, const std::vector<Monomial>& lead_terms) {
    for (auto& m : lead_terms)
        if (m.is_one()) return -1;
    int best = -1;
    // subsets of the variable set; nvars stays small here
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << nvars); ++mask) {
        bool ok = true;
        for (auto& m : lead_terms) {
            bool support_inside = true;
            for (std::size_t i = 0; i < nvars && support_inside; ++i)
                if (m[i] > 0 && !(mask >> i & 1)) support_inside = false;
            if (support_inside) { ok = false; break; }
        }
        if (ok) best = std::max(best, __builtin_popcountll(mask));
    }
    return best;
}

} // namespace rrlab
