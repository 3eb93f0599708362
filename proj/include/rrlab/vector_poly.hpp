/**
 * @file vector_poly.hpp
 * @brief Elements of free modules S^r and the module term orders.
 */
#ifndef RRLAB_VECTOR_POLY_HPP
#define RRLAB_VECTOR_POLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "rrlab/polynomial.hpp"

namespace rrlab {

struct VTerm {
    std::uint32_t comp = 0;
    Monomial mono;
    Scalar coeff;
    bool operator==(const VTerm&) const = default;
};

/// Module term order. `top` compares monomials before component positions
/// (with generator degree shifts folded in for graded base orders); position
/// over term compares the component first. Shifts may be empty, meaning all
/// zero.
struct ModuleOrder {
    MonomialOrder base = MonomialOrder::degrevlex();
    bool top = true;
    std::vector<int> shifts;

    int shift_of(std::uint32_t comp) const {
        return comp < shifts.size() ? shifts[comp] : 0;
    }
    int shifted_degree(const VTerm& t) const {
        return static_cast<int>(t.mono.degree()) + shift_of(t.comp);
    }

    /// -1, 0, 1. A strict total order on (component, monomial) pairs.
    int compare(const VTerm& a, const VTerm& b) const;
};

class VectorPoly {
public:
    VectorPoly() = default;
    VectorPoly(std::vector<VTerm> terms, const ModuleOrder& ord);

    static VectorPoly zero() { return {}; }
    static VectorPoly unit(std::uint32_t comp, std::size_t nvars, const Field& f, const ModuleOrder& ord);
    static VectorPoly from_polynomial(const Polynomial& f, std::uint32_t comp, const ModuleOrder& ord);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<VTerm>& terms() const { return terms_; }
    const VTerm& leading_term() const;

    /// Internal degree of a homogeneous element (shifted); throws on zero.
    int degree(const ModuleOrder& ord) const;
    bool is_homogeneous(const ModuleOrder& ord) const;

    /// The component `c` entry as a polynomial.
    Polynomial component(std::uint32_t c, const MonomialOrder& ord) const;

    bool operator==(const VectorPoly&) const = default;

    std::string str(const std::vector<std::string>& vars) const;

private:
    std::vector<VTerm> terms_;
};

VectorPoly vp_add(const VectorPoly& a, const VectorPoly& b, const ModuleOrder& ord);
VectorPoly vp_sub(const VectorPoly& a, const VectorPoly& b, const ModuleOrder& ord);
VectorPoly vp_neg(const VectorPoly& a, const ModuleOrder& ord);
VectorPoly vp_scale(const VectorPoly& a, const Scalar& c, const ModuleOrder& ord);
VectorPoly vp_mul_term(const VectorPoly& a, const Monomial& m, const Scalar& c, const ModuleOrder& ord);
VectorPoly vp_mul_poly(const VectorPoly& a, const Polynomial& f, const ModuleOrder& ord);
VectorPoly vp_reorder(const VectorPoly& a, const ModuleOrder& ord);

} // namespace rrlab

#endif
