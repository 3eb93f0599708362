/**
 * @file scalar.hpp
 * @brief Exact field arithmetic: arbitrary-precision rationals and prime fields.
 */
#ifndef RRLAB_SCALAR_HPP
#define RRLAB_SCALAR_HPP

#include <cstdint>
#include <string>
#include <gmpxx.h>

namespace rrlab {

/// Field descriptor: the rationals (characteristic 0) or Z/p for a prime p.
class Field {
public:
    Field() = default;

    static Field rationals() { return Field{}; }
    static Field prime(std::uint32_t p);

    bool is_prime_field() const { return p_ != 0; }
    std::uint32_t characteristic() const { return p_; }
    std::string name() const;

    bool operator==(const Field&) const = default;

private:
    std::uint32_t p_ = 0; // 0 means Q
};

/// One field element. Rationals are kept in lowest terms with positive
/// denominator (GMP canonical form); prime-field values are integers in [0, p).
class Scalar {
public:
    Scalar() = default; // zero over Q

    static Scalar of(const Field& f, long value);
    static Scalar of(const Field& f, const mpz_class& num, const mpz_class& den);
    static Scalar zero(const Field& f) { return of(f, 0); }
    static Scalar one(const Field& f) { return of(f, 1); }

    Field field() const { return p_ == 0 ? Field::rationals() : Field::prime(p_); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    const mpq_class& value() const { return v_; }
    std::string str() const;

private:
    Scalar(mpq_class v, std::uint32_t p) : v_(std::move(v)), p_(p) {}
    void reduce();

    mpq_class v_;
    std::uint32_t p_ = 0;
};

} // namespace rrlab

#endif
