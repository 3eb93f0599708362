/**
 * @file groebner.hpp
 * @brief Buchberger's algorithm for submodules of free modules, normal
 *        forms with quotient tracking, Schreyer syzygies and elimination.
 *
 * The engine works over the polynomial ring; quotient rings are handled by
 * the callers adjoining multiples of the defining ideal to the generator
 * lists. Inputs need not be homogeneous.
 */
#ifndef RRLAB_GROEBNER_HPP
#define RRLAB_GROEBNER_HPP

#include <vector>

#include "rrlab/vector_poly.hpp"

namespace rrlab {

struct GroebnerBasis {
    std::vector<VectorPoly> elems; // monic, sorted descending by lead term
    ModuleOrder order;
    std::uint32_t rank = 1;
    bool reduced = true; // bases from buchberger() are always interreduced
};

struct EngineOptions {
    bool self_check = false; // re-verify every emitted basis (test suites turn this on)
};
EngineOptions& engine_options();

/// Reduced Groebner basis of the submodule generated by `gens` in S^rank.
GroebnerBasis buchberger(const std::vector<VectorPoly>& gens, const ModuleOrder& ord, std::uint32_t rank);

/// Remainder with no term divisible by a basis lead term. Linear in v and
/// idempotent; v - NF(v) lies in the submodule.
VectorPoly normal_form(const VectorPoly& v, const GroebnerBasis& gb);
VectorPoly normal_form(const VectorPoly& v, const std::vector<VectorPoly>& basis, const ModuleOrder& ord);

struct NfQuotients {
    VectorPoly remainder;
    std::vector<Polynomial> quotients; // v = sum quotients[k] * basis[k] + remainder
};
NfQuotients normal_form_ext(const VectorPoly& v, const std::vector<VectorPoly>& basis, const ModuleOrder& ord);

/// Generators of the syzygy module of the given generators (kernel of the
/// map R^s -> R^rank sending unit j to gens[j]), computed from S-pair
/// reductions of the reduced basis and transformed back to the inputs.
std::vector<VectorPoly> syzygies(const std::vector<VectorPoly>& gens, const ModuleOrder& ord,
                                 std::uint32_t rank);

/// Asserts that every S-vector of the basis reduces to zero. Throws on
/// failure; used by the self-check mode and the test suites.
void verify_groebner(const GroebnerBasis& gb);

/// Generators of the ideal generated by `gens` intersected with the subring
/// omitting the first `drop_first` variables. The returned polynomials are
/// still written in the full variable set but do not involve the dropped
/// ones.
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, std::size_t drop_first);

} // namespace rrlab

#endif
