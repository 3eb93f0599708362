#include "rrlab/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace rrlab {

Polynomial::Polynomial(std::vector<PTerm> terms, const MonomialOrder& ord) {
    std::stable_sort(terms.begin(), terms.end(), [&](const PTerm& a, const PTerm& b) {
        return ord.compare(a.mono, b.mono) > 0;
    });
    for (auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        if (!terms_.empty() && terms_.back().mono == t.mono) {
            terms_.back().coeff += t.coeff;
            if (terms_.back().coeff.is_zero()) terms_.pop_back();
        } else {
            terms_.push_back(std::move(t));
        }
    }
}

Polynomial Polynomial::constant(const Field& f, long c, std::size_t nvars, const MonomialOrder& ord) {
    return Polynomial({PTerm{Monomial::one(nvars), Scalar::of(f, c)}}, ord);
}

Polynomial Polynomial::term(Monomial m, Scalar c, const MonomialOrder& ord) {
    return Polynomial({PTerm{std::move(m), std::move(c)}}, ord);
}

const PTerm& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front();
}

std::uint32_t Polynomial::degree() const {
    std::uint32_t d = 0;
    for (auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    for (auto& t : terms_)
        if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
}

std::string Polynomial::str(const std::vector<std::string>& vars) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& t : terms_) {
        std::string c = t.coeff.str();
        bool neg = !c.empty() && c[0] == '-';
        if (first) {
            if (neg) { out += "-"; c = c.substr(1); }
        } else {
            out += neg ? " - " : " + ";
            if (neg) c = c.substr(1);
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
            if (t.mono[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars[i];
            if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
        }
        if (mono.empty()) {
            out += c;
        } else if (c == "1") {
            out += mono;
        } else {
            out += c + "*" + mono;
        }
    }
    return out;
}

static std::vector<PTerm> merged(const std::vector<PTerm>& a, const std::vector<PTerm>& b, bool subtract,
                                 const MonomialOrder& ord) {
    std::vector<PTerm> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = ord.compare(a[i].mono, b[j].mono);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back({b[j].mono, subtract ? -b[j].coeff : b[j].coeff});
            ++j;
        } else {
            Scalar s = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
            if (!s.is_zero()) out.push_back({a[i].mono, std::move(s)});
            ++i; ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back({b[j].mono, subtract ? -b[j].coeff : b[j].coeff});
    return out;
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    return Polynomial(merged(f.terms(), g.terms(), false, ord), ord);
}

Polynomial poly_sub(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    return Polynomial(merged(f.terms(), g.terms(), true, ord), ord);
}

Polynomial poly_mul_term(const Polynomial& f, const Monomial& m, const Scalar& c, const MonomialOrder& ord) {
    if (c.is_zero()) return Polynomial::zero();
    std::vector<PTerm> out;
    out.reserve(f.terms().size());
    for (auto& t : f.terms()) out.push_back({t.mono * m, t.coeff * c});
    return Polynomial(std::move(out), ord);
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    Polynomial acc;
    for (auto& t : g.terms())
        acc = poly_add(acc, poly_mul_term(f, t.mono, t.coeff, ord), ord);
    return acc;
}

Polynomial poly_scale(const Polynomial& f, const Scalar& c, const MonomialOrder& ord) {
    return poly_mul_term(f, Monomial::one(f.is_zero() ? 0 : f.nvars()), c, ord);
}

Polynomial poly_neg(const Polynomial& f, const MonomialOrder& ord) {
    std::vector<PTerm> out;
    out.reserve(f.terms().size());
    for (auto& t : f.terms()) out.push_back({t.mono, -t.coeff});
    return Polynomial(std::move(out), ord);
}

Polynomial poly_reorder(const Polynomial& f, const MonomialOrder& ord) {
    return Polynomial(f.terms(), ord);
}

} // namespace rrlab
