/**
 * @file oracle.hpp
 * @brief Degreewise exact linear algebra oracle.
 *
 * Recomputes membership, colon, product, intersection and Ratliff-Rush
 * stages purely from monomial-spanned graded pieces and Gaussian
 * elimination, with no Groebner machinery. Used as the independent check
 * against the engine path; results are valid up to an explicit degree bound
 * and are never silently wrong beyond it.
 */
#ifndef RRLAB_ORACLE_HPP
#define RRLAB_ORACLE_HPP

#include <map>

#include "rrlab/linalg.hpp"
#include "rrlab/submodule.hpp"

namespace rrlab {

/// Ordered monomial basis of the degree-e piece of the ambient free module
/// S^rank (before reducing modulo J).
struct PieceBasis {
    int degree = 0;
    std::vector<std::pair<std::uint32_t, Monomial>> elems;

    std::size_t width() const { return elems.size(); }
    Vec coords(const VectorPoly& v, const Field& f) const;
    VectorPoly element(const Vec& c, const ModuleOrder& ord, const Field& f) const;
};

class OracleContext {
public:
    OracleContext(RingPtr ring, std::uint32_t rank, std::vector<int> shifts, int max_degree);

    const RingPtr& ring() const { return ring_; }
    std::uint32_t rank() const { return rank_; }
    const std::vector<int>& shifts() const { return shifts_; }
    int max_degree() const { return max_degree_; }
    const ModuleOrder& order() const { return order_; }

    const PieceBasis& piece(int e) const;
    /// Span of (J*F)_e, the coordinate subspace quotiented away over R.
    const RowSpan& defining_span(int e) const;

private:
    RingPtr ring_;
    std::uint32_t rank_;
    std::vector<int> shifts_;
    int max_degree_;
    ModuleOrder order_;
    mutable std::map<int, PieceBasis> pieces_;
    mutable std::map<int, RowSpan> jspans_;
};

/// Truncated module data: one span per degree on [lo, hi], always containing
/// the defining span. Dimensions are reported relative to J*F.
struct OracleModule {
    const OracleContext* ctx = nullptr;
    int lo = 0, hi = -1;
    std::map<int, RowSpan> span;

    int dim(int e) const;
    bool contains(const VectorPoly& v) const;
    /// Basis representatives of the degree-e piece modulo J*F.
    std::vector<VectorPoly> piece_representatives(int e) const;
    void require_degree(int e) const; // throws "inconclusive" outside [lo, hi]
};

/// Span of the module generated by `gens` (plus J*F) on all degrees up to the
/// context bound.
OracleModule oracle_span(const OracleContext& ctx, const std::vector<VectorPoly>& gens);

/// Span of m^n * (module of gens).
OracleModule oracle_power_span(const OracleContext& ctx, const std::vector<VectorPoly>& gens, int n);

/// (N :_M f) degreewise; valid up to hi = min bound - deg f.
OracleModule oracle_colon_elem(const OracleContext& ctx, const OracleModule& N, const Polynomial& f,
                               const OracleModule& M);

/// (N :_M I) for an ideal given by generators.
OracleModule oracle_colon_ideal(const OracleContext& ctx, const OracleModule& N,
                                const std::vector<Polynomial>& ideal_gens, const OracleModule& M);

/// (N :_M m^k), the colon against all degree-k monomials.
OracleModule oracle_colon_irrelevant_power(const OracleContext& ctx, const OracleModule& N, int k,
                                           const OracleModule& M);

OracleModule oracle_intersect(const OracleContext& ctx, const OracleModule& A, const OracleModule& B);

/// Per-stage dimension tables of the chain (m^{n+k}M :_M m^k) for k = 1..kmax
/// together with the union span (the Ratliff-Rush stage seen by the oracle).
struct OracleRRChain {
    std::vector<OracleModule> stages;  // index k-1
    OracleModule closure;              // union of the stages
    bool stabilized = false;           // a trailing window of equal stages was seen
};
OracleRRChain oracle_rr_chain(const OracleContext& ctx, const std::vector<VectorPoly>& gens, int n, int kmax,
                              int window = 2);

/// Exact agreement between an engine-path submodule and an oracle span up to
/// degree D: piecewise dimensions match, oracle representatives lie in the
/// submodule and submodule generators lie in the span. Throws when D exceeds
/// the oracle's conclusive range.
bool oracle_agrees(const Submodule& engine_result, const OracleModule& oracle_result, int D);

} // namespace rrlab

#endif
