/**
 * @file polynomial.hpp
 * @brief Sparse multivariate polynomials over an exact field.
 *
 * Terms are kept in strictly descending order for the monomial order the
 * value was built with; no zero coefficients, no duplicate monomials.
 */
#ifndef RRLAB_POLYNOMIAL_HPP
#define RRLAB_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "rrlab/monomial.hpp"
#include "rrlab/scalar.hpp"

namespace rrlab {

struct PTerm {
    Monomial mono;
    Scalar coeff;
    bool operator==(const PTerm&) const = default;
};

class Polynomial {
public:
    Polynomial() = default;

    /// Canonicalizes: merges duplicates, drops zeros, sorts descending.
    Polynomial(std::vector<PTerm> terms, const MonomialOrder& ord);

    static Polynomial zero() { return {}; }
    static Polynomial constant(const Field& f, long c, std::size_t nvars, const MonomialOrder& ord);
    static Polynomial term(Monomial m, Scalar c, const MonomialOrder& ord);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<PTerm>& terms() const { return terms_; }
    const PTerm& leading_term() const;
    std::size_t nvars() const { return terms_.empty() ? 0 : terms_.front().mono.nvars(); }

    /// Total degree of the leading term (polynomials here are usually
    /// homogeneous, where this is the degree).
    std::uint32_t degree() const;
    bool is_homogeneous() const;

    bool operator==(const Polynomial&) const = default;

    std::string str(const std::vector<std::string>& vars) const;

private:
    std::vector<PTerm> terms_;
};

Polynomial poly_add(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);
Polynomial poly_sub(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);
Polynomial poly_scale(const Polynomial& f, const Scalar& c, const MonomialOrder& ord);
Polynomial poly_neg(const Polynomial& f, const MonomialOrder& ord);
Polynomial poly_mul_term(const Polynomial& f, const Monomial& m, const Scalar& c, const MonomialOrder& ord);

/// Re-sorts a polynomial under a different order.
Polynomial poly_reorder(const Polynomial& f, const MonomialOrder& ord);

} // namespace rrlab

#endif
