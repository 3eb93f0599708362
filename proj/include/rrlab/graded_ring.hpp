/**
 * @file graded_ring.hpp
 * @brief Standard graded algebras R = S/J with irrelevant maximal ideal m.
 */
#ifndef RRLAB_GRADED_RING_HPP
#define RRLAB_GRADED_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rrlab/groebner.hpp"

namespace rrlab {

/// Domain error raised by the algebra layers.
class algebra_error : public std::runtime_error {
public:
    explicit algebra_error(const std::string& what) : std::runtime_error(what) {}
};

/// Invariant breaches (internal cross-checks), never user input errors.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

class GradedRing {
public:
    /// Builds S/J over the given field. J must be homogeneous and proper.
    static std::shared_ptr<const GradedRing> make(Field field, std::vector<std::string> vars,
                                                  std::vector<Polynomial> defining = {});

    const Field& field() const { return field_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& var_names() const { return vars_; }
    const std::vector<Polynomial>& defining() const { return defining_; }
    bool is_polynomial() const { return defining_.empty(); }

    MonomialOrder order() const { return MonomialOrder::degrevlex(); }
    const GroebnerBasis& defining_gb() const { return jgb_; }

    /// The J = 0 ring on the same variables (this ring when already polynomial).
    std::shared_ptr<const GradedRing> ambient() const;

    /// Normal form modulo the defining ideal.
    Polynomial reduce(const Polynomial& f) const;

    /// Krull dimension of R, read off the initial ideal of J.
    int krull_dim() const;

    mutable std::optional<int> cached_depth; // filled by ring_depth()

private:
    GradedRing() = default;

    Field field_;
    std::vector<std::string> vars_;
    std::vector<Polynomial> defining_;
    GroebnerBasis jgb_;
    mutable std::shared_ptr<const GradedRing> ambient_;
    mutable std::optional<int> dim_;
};

using RingPtr = std::shared_ptr<const GradedRing>;

/// Krull dimension of the quotient by a monomial ideal: the largest number of
/// variables avoiding the support of every generator. -1 for the unit ideal.
int monomial_quotient_dim(std::size_t nvars, const std::vector<Monomial>& lead_terms);

} // namespace rrlab

#endif
