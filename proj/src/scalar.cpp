#include "rrlab/scalar.hpp"

#include <stdexcept>

namespace rrlab {

static bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (!is_prime_u32(p))
        throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
    Field f;
    f.p_ = p;
    return f;
}

std::string Field::name() const {
    return p_ == 0 ? std::string("Q") : "Fp:" + std::to_string(p_);
}

void Scalar::reduce() {
    if (p_ == 0) {
        v_.canonicalize();
        return;
    }
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), v_.get_num().get_mpz_t(), mpz_class(p_).get_mpz_t());
    v_ = mpq_class(r);
}

Scalar Scalar::of(const Field& f, long value) {
    Scalar s(mpq_class(value), f.characteristic());
    s.reduce();
    return s;
}

Scalar Scalar::of(const Field& f, const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (f.is_prime_field()) {
        Scalar d(mpq_class(den), f.characteristic());
        d.reduce();
        Scalar n(mpq_class(num), f.characteristic());
        n.reduce();
        return n / d;
    }
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q), 0);
}

Scalar Scalar::operator-() const {
    Scalar r(-v_, p_);
    r.reduce();
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (p_ != o.p_) throw std::invalid_argument("scalar field mismatch");
    Scalar r(v_ + o.v_, p_);
    if (p_ != 0) r.reduce();
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    if (p_ != o.p_) throw std::invalid_argument("scalar field mismatch");
    Scalar r(v_ - o.v_, p_);
    if (p_ != 0) r.reduce();
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (p_ != o.p_) throw std::invalid_argument("scalar field mismatch");
    Scalar r(v_ * o.v_, p_);
    if (p_ != 0) r.reduce();
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (p_ == 0) return Scalar(1 / v_, 0);
    mpz_class inv;
    if (!mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), mpz_class(p_).get_mpz_t()))
        throw std::domain_error("non-invertible residue");
    return Scalar(mpq_class(inv), p_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    return *this * o.inverse();
}

std::string Scalar::str() const {
    return v_.get_str();
}

} // namespace rrlab
