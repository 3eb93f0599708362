#include "rrlab/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace rrlab {

Monomial::Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {
    deg_ = std::accumulate(e_.begin(), e_.end(), 0u);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, std::uint32_t k) {
    Monomial m(nvars);
    m.e_[i] = k;
    m.deg_ = k;
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw std::invalid_argument("monomial dimension mismatch");
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    r.deg_ = deg_ + o.deg_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw std::invalid_argument("monomial dimension mismatch");
    if (deg_ > o.deg_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::quotient_by(const Monomial& d) const {
    if (!d.divides(*this)) throw std::invalid_argument("inexact monomial division");
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - d.e_[i];
    r.deg_ = deg_ - d.deg_;
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.e_.size() != b.e_.size()) throw std::invalid_argument("monomial dimension mismatch");
    Monomial r(a.e_.size());
    std::uint32_t deg = 0;
    for (std::size_t i = 0; i < a.e_.size(); ++i) {
        r.e_[i] = std::max(a.e_[i], b.e_[i]);
        deg += r.e_[i];
    }
    r.deg_ = deg;
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    if (a.e_.size() != b.e_.size()) throw std::invalid_argument("monomial dimension mismatch");
    Monomial r(a.e_.size());
    std::uint32_t deg = 0;
    for (std::size_t i = 0; i < a.e_.size(); ++i) {
        r.e_[i] = std::min(a.e_[i], b.e_[i]);
        deg += r.e_[i];
    }
    r.deg_ = deg;
    return r;
}

namespace {

// reverse lexicographic tie-break: the last differing exponent decides,
// smaller exponent there means the bigger monomial
int revlex_tail(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

int cmp_deg(std::uint32_t da, std::uint32_t db) {
    if (da != db) return da > db ? 1 : -1;
    return 0;
}

} // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("monomial order dimension mismatch");
    const std::size_t n = a.nvars();
    switch (kind) {
    case OrderKind::degrevlex: {
        if (int c = cmp_deg(a.degree(), b.degree())) return c;
        return revlex_tail(a, b, 0, n);
    }
    case OrderKind::lex: {
        for (std::size_t i = 0; i < n; ++i)
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
    }
    case OrderKind::block_elim: {
        std::uint32_t da = 0, db = 0;
        for (std::size_t i = 0; i < block; ++i) { da += a[i]; db += b[i]; }
        if (int c = cmp_deg(da, db)) return c;
        if (int c = revlex_tail(a, b, 0, block)) return c;
        if (int c = cmp_deg(a.degree() - da, b.degree() - db)) return c;
        return revlex_tail(a, b, block, n);
    }
    }
    return 0;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (d == 0) out.push_back(Monomial(0));
        return out;
    }
    std::vector<std::uint32_t> cur(nvars, 0);
    // lexicographic enumeration, first variable highest
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t rem) -> void {
        if (i + 1 == nvars) {
            cur[i] = rem;
            out.push_back(Monomial(cur));
            return;
        }
        for (std::uint32_t e = rem + 1; e-- > 0;) {
            cur[i] = e;
            self(self, i + 1, rem - e);
        }
    };
    rec(rec, 0, d);
    return out;
}

} // namespace rrlab
