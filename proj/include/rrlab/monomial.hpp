/**
 * @file monomial.hpp
 * @brief Exponent vectors and the monomial orders used by the engine.
 */
#ifndef RRLAB_MONOMIAL_HPP
#define RRLAB_MONOMIAL_HPP

#include <cstdint>
#include <vector>

namespace rrlab {

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0), deg_(0) {}
    explicit Monomial(std::vector<std::uint32_t> exps);

    static Monomial one(std::size_t nvars) { return Monomial(nvars); }
    static Monomial variable(std::size_t nvars, std::size_t i, std::uint32_t k = 1);

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    std::uint32_t degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;   // this | o
    Monomial quotient_by(const Monomial& d) const; // exact division this / d
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);

    const std::vector<std::uint32_t>& exponents() const { return e_; }

    bool operator==(const Monomial&) const = default;
    bool operator<(const Monomial& o) const { return e_ < o.e_; } // container order only

private:
    std::vector<std::uint32_t> e_;
    std::uint32_t deg_ = 0;
};

enum class OrderKind { degrevlex, lex, block_elim };

/// A global monomial order. block_elim compares the first `block` variables
/// first (by degree, then reverse lex), so a Groebner basis in that order
/// eliminates them.
struct MonomialOrder {
    OrderKind kind = OrderKind::degrevlex;
    std::size_t block = 0;

    static MonomialOrder degrevlex() { return {OrderKind::degrevlex, 0}; }
    static MonomialOrder lex() { return {OrderKind::lex, 0}; }
    static MonomialOrder elimination(std::size_t first_block) { return {OrderKind::block_elim, first_block}; }

    /// -1, 0, 1 for a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const;

    bool operator==(const MonomialOrder&) const = default;
};

/// All monomials of the given total degree, in a fixed deterministic order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d);

} // namespace rrlab

#endif
