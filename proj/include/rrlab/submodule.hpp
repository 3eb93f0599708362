/**
 * @file submodule.hpp
 * @brief Graded submodules of free modules over R = S/J and the colon,
 *        product, intersection, minimal-generator and length operations.
 */
#ifndef RRLAB_SUBMODULE_HPP
#define RRLAB_SUBMODULE_HPP

#include <map>

#include "rrlab/graded_ring.hpp"

namespace rrlab {

class Submodule {
public:
    Submodule() = default;

    /// Generators are reduced modulo the defining ideal; zero generators are
    /// dropped. Homogeneity is enforced unless `check_homogeneous` is false
    /// (the localization safety valve is the one inhomogeneous consumer).
    Submodule(RingPtr ring, std::uint32_t rank, std::vector<int> shifts, std::vector<VectorPoly> gens,
              bool check_homogeneous = true);

    static Submodule zero(RingPtr ring, std::uint32_t rank, std::vector<int> shifts);
    static Submodule free_module(RingPtr ring, std::uint32_t rank, std::vector<int> shifts);
    static Submodule ideal(RingPtr ring, std::vector<Polynomial> gens);
    /// The irrelevant maximal ideal m = (x_1, ..., x_d).
    static Submodule irrelevant(RingPtr ring);
    /// m^k, generated directly by the degree-k monomials.
    static Submodule irrelevant_power(RingPtr ring, std::uint32_t k);

    const RingPtr& ring() const { return ring_; }
    std::uint32_t rank() const { return rank_; }
    const std::vector<int>& shifts() const { return shifts_; }
    const std::vector<VectorPoly>& gens() const { return gens_; }
    const ModuleOrder& order() const { return order_; }

    bool same_ambient(const Submodule& o) const;

    /// Reduced basis of N + J*F over the polynomial ring (the padding is part
    /// of the basis, so normal forms are canonical modulo both).
    const GroebnerBasis& gb() const;
    std::vector<VectorPoly> padding() const;

    VectorPoly reduce(const VectorPoly& v) const { return normal_form(v, gb()); }
    bool contains(const VectorPoly& v) const { return reduce(v).is_zero(); }
    bool contains_all(const Submodule& o) const;
    bool equals(const Submodule& o) const;
    bool is_zero() const { return gens_.empty(); }

    /// k-dimension of the degree-e piece.
    int graded_dim(int e) const;
    /// k-dimension of the degree-e piece of the ambient free module over R.
    int ambient_graded_dim(int e) const;

    std::vector<int> gen_degrees() const;
    int min_gen_degree() const;
    int max_gen_degree() const;

    /// Generators replaced by the reduced basis (padding classes dropped).
    Submodule trimmed() const;

private:
    RingPtr ring_;
    std::uint32_t rank_ = 1;
    std::vector<int> shifts_;
    std::vector<VectorPoly> gens_;
    ModuleOrder order_;
    mutable std::shared_ptr<const GroebnerBasis> gb_;
};

/// Syzygies of the given elements of R^rank over the quotient ring: the
/// defining ideal is adjoined and the result projected back to the real
/// block. Vectors live in R^{gens.size()}.
std::vector<VectorPoly> syzygies_over(const RingPtr& ring, const std::vector<VectorPoly>& gens,
                                      std::uint32_t rank, const std::vector<int>& shifts);

/// (N :_M f) = { v in M : f v in N }. f = 0 returns M (documented convention).
Submodule colon_elem(const Submodule& N, const Polynomial& f, const Submodule& M);
/// (N :_M I) over the generators of the ideal I. I = 0 returns M.
Submodule colon_ideal(const Submodule& N, const Submodule& I, const Submodule& M);
/// Product submodule I*N for an ideal I.
Submodule mult_ideal(const Submodule& I, const Submodule& N);
Submodule intersect(const Submodule& A, const Submodule& B);
Submodule sum(const Submodule& A, const Submodule& B);

/// Minimal homogeneous generators (graded Nakayama).
std::vector<VectorPoly> min_gens(const Submodule& N);

/// The ideal (N2 : N1) = { f : f N1 contained in N2 }.
Submodule annihilator_quotient(const Submodule& N1, const Submodule& N2);

/// Krull dimension of N1/N2 (dimension of R/ann); -1 for the zero module.
int quotient_krull_dim(const Submodule& N1, const Submodule& N2);

/// True when (N1/N2) localized at m vanishes: ann(N1/N2) + m = (1).
bool is_locally_zero(const Submodule& N1, const Submodule& N2);

struct FiniteLengthModule {
    Submodule sub, rel;          // rel contained in sub
    int annihilation_power = -1; // least c with m^c sub contained in rel
    int dim = 0;                 // total k-dimension
    std::map<int, int> hilbert;  // degree -> k-dimension of the piece
};

/// Certifies finite length by bounded m-power annihilation and sums the
/// Hilbert values. Returns nothing when the bound is exhausted.
std::optional<FiniteLengthModule> try_finite_length(const Submodule& N1, const Submodule& N2, int power_bound);

/// dim_k N1/N2; throws with a witness when the quotient is not finite length.
FiniteLengthModule kdim_quotient(const Submodule& N1, const Submodule& N2, int power_bound = 20);

} // namespace rrlab

#endif
