#include "rrlab/vector_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace rrlab {

int ModuleOrder::compare(const VTerm& a, const VTerm& b) const {
    if (top) {
        if (base.kind == OrderKind::degrevlex) {
            int da = shifted_degree(a), db = shifted_degree(b);
            if (da != db) return da > db ? 1 : -1;
        }
        if (int c = base.compare(a.mono, b.mono)) return c;
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return 0;
    }
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return base.compare(a.mono, b.mono);
}

VectorPoly::VectorPoly(std::vector<VTerm> terms, const ModuleOrder& ord) {
    std::stable_sort(terms.begin(), terms.end(), [&](const VTerm& a, const VTerm& b) {
        return ord.compare(a, b) > 0;
    });
    for (auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        if (!terms_.empty() && terms_.back().comp == t.comp && terms_.back().mono == t.mono) {
            terms_.back().coeff += t.coeff;
            if (terms_.back().coeff.is_zero()) terms_.pop_back();
        } else {
            terms_.push_back(std::move(t));
        }
    }
}

VectorPoly VectorPoly::unit(std::uint32_t comp, std::size_t nvars, const Field& f, const ModuleOrder& ord) {
    return VectorPoly({VTerm{comp, Monomial::one(nvars), Scalar::one(f)}}, ord);
}

VectorPoly VectorPoly::from_polynomial(const Polynomial& f, std::uint32_t comp, const ModuleOrder& ord) {
    std::vector<VTerm> ts;
    ts.reserve(f.terms().size());
    for (auto& t : f.terms()) ts.push_back({comp, t.mono, t.coeff});
    return VectorPoly(std::move(ts), ord);
}

const VTerm& VectorPoly::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero vector");
    return terms_.front();
}

int VectorPoly::degree(const ModuleOrder& ord) const {
    if (terms_.empty()) throw std::logic_error("degree of zero vector");
    return ord.shifted_degree(terms_.front());
}

bool VectorPoly::is_homogeneous(const ModuleOrder& ord) const {
    if (terms_.empty()) return true;
    int d = ord.shifted_degree(terms_.front());
    for (auto& t : terms_)
        if (ord.shifted_degree(t) != d) return false;
    return true;
}

Polynomial VectorPoly::component(std::uint32_t c, const MonomialOrder& ord) const {
    std::vector<PTerm> ts;
    for (auto& t : terms_)
        if (t.comp == c) ts.push_back({t.mono, t.coeff});
    return Polynomial(std::move(ts), ord);
}

std::string VectorPoly::str(const std::vector<std::string>& vars) const {
    if (terms_.empty()) return "0";
    std::string out = "(";
    std::uint32_t rank = 0;
    for (auto& t : terms_) rank = std::max(rank, t.comp + 1);
    MonomialOrder mo = MonomialOrder::degrevlex();
    for (std::uint32_t c = 0; c < rank; ++c) {
        if (c) out += ", ";
        out += component(c, mo).str(vars);
    }
    return out + ")";
}

static std::vector<VTerm> merged(const std::vector<VTerm>& a, const std::vector<VTerm>& b, bool subtract,
                                 const ModuleOrder& ord) {
    std::vector<VTerm> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = ord.compare(a[i], b[j]);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back({b[j].comp, b[j].mono, subtract ? -b[j].coeff : b[j].coeff});
            ++j;
        } else {
            Scalar s = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
            if (!s.is_zero()) out.push_back({a[i].comp, a[i].mono, std::move(s)});
            ++i; ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back({b[j].comp, b[j].mono, subtract ? -b[j].coeff : b[j].coeff});
    return out;
}

VectorPoly vp_add(const VectorPoly& a, const VectorPoly& b, const ModuleOrder& ord) {
    return VectorPoly(merged(a.terms(), b.terms(), false, ord), ord);
}

VectorPoly vp_sub(const VectorPoly& a, const VectorPoly& b, const ModuleOrder& ord) {
    return VectorPoly(merged(a.terms(), b.terms(), true, ord), ord);
}

VectorPoly vp_neg(const VectorPoly& a, const ModuleOrder& ord) {
    std::vector<VTerm> ts;
    ts.reserve(a.terms().size());
    for (auto& t : a.terms()) ts.push_back({t.comp, t.mono, -t.coeff});
    return VectorPoly(std::move(ts), ord);
}

VectorPoly vp_scale(const VectorPoly& a, const Scalar& c, const ModuleOrder& ord) {
    if (c.is_zero()) return VectorPoly::zero();
    std::vector<VTerm> ts;
    ts.reserve(a.terms().size());
    for (auto& t : a.terms()) ts.push_back({t.comp, t.mono, t.coeff * c});
    return VectorPoly(std::move(ts), ord);
}

VectorPoly vp_mul_term(const VectorPoly& a, const Monomial& m, const Scalar& c, const ModuleOrder& ord) {
    if (c.is_zero()) return VectorPoly::zero();
    std::vector<VTerm> ts;
    ts.reserve(a.terms().size());
    for (auto& t : a.terms()) ts.push_back({t.comp, t.mono * m, t.coeff * c});
    return VectorPoly(std::move(ts), ord);
}

VectorPoly vp_mul_poly(const VectorPoly& a, const Polynomial& f, const ModuleOrder& ord) {
    VectorPoly acc;
    for (auto& t : f.terms())
        acc = vp_add(acc, vp_mul_term(a, t.mono, t.coeff, ord), ord);
    return acc;
}

VectorPoly vp_reorder(const VectorPoly& a, const ModuleOrder& ord) {
    return VectorPoly(a.terms(), ord);
}

} // namespace rrlab
