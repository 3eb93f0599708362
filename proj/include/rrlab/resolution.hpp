/**
 * @file resolution.hpp
 * @brief Minimal graded free resolutions, Betti tables, depth, projective
 *        dimension and bounded Ext-vanishing evidence for G-dimension.
 */
#ifndef RRLAB_RESOLUTION_HPP
#define RRLAB_RESOLUTION_HPP

#include "rrlab/submodule.hpp"

namespace rrlab {

/// A module given as F/N for a graded free F with the listed shifts.
struct QuotientModule {
    RingPtr ring;
    std::uint32_t rank = 1;
    std::vector<int> shifts;
    Submodule relations;

    static QuotientModule of(Submodule relations_in_free);
    static QuotientModule cyclic(RingPtr ring, std::vector<Polynomial> ideal_gens);
    static QuotientModule residue_field(RingPtr ring);
    bool is_zero_module() const;
};

struct ResolutionStep {
    std::vector<VectorPoly> cols; // columns of the differential, in R^{previous rank}
    std::vector<int> shifts;      // degrees of the columns
};

struct Resolution {
    std::vector<int> base_shifts;      // F_0
    std::vector<ResolutionStep> steps; // d_1, d_2, ...
    std::vector<Submodule> kernels;    // kernels[i] is the syzygy module covered by step i
    bool complete = false;             // a zero kernel was reached
    bool minimal = true;

    std::uint32_t rank_of(int i) const;            // rank of F_i
    const std::vector<int>& shifts_of(int i) const; // shifts of F_i
};

/// Resolution of the module N itself (its free cover is built on minimal
/// generators). `over_ambient` resolves N as a module over the ambient
/// polynomial ring, which is always finite.
Resolution resolve_submodule(const Submodule& N, int max_steps, bool minimal = true,
                             bool over_ambient = false);
Resolution resolve_quotient(const QuotientModule& X, int max_steps, bool minimal = true,
                            bool over_ambient = false);

struct BettiTable {
    std::map<std::pair<int, int>, int> beta; // (homological index, internal degree)
    bool complete = false;
    std::optional<int> pd;

    int regularity() const; // max j - i over nonzero entries
    std::string str() const;
};
BettiTable betti_table(const Resolution& r);

/// depth via Auslander-Buchsbaum over the ambient polynomial ring.
int module_depth(const Submodule& N);
int quotient_depth(const QuotientModule& X);
int ring_depth(const RingPtr& R);

enum class Verdict { finite, infinite };

struct HdimReport {
    std::string label;
    Verdict verdict = Verdict::finite;
    int value = -1; // the dimension when finite
    int cutoff = 0; // resolution length used for the decision
    int bound = 0;  // Ext range inspected (evidence reports)
    bool evidence_only = false;
    bool all_ext_vanish = false;
    bool dual_ext_vanish = false;
    bool biduality = false;
    std::string detail;
};

/// Exact projective dimension over R: the resolution is pushed to
/// depth(R) + 1 steps; surviving past depth(R) certifies an infinite verdict.
HdimReport projdim(const Submodule& N);
HdimReport projdim_quotient(const QuotientModule& X);

/// Castelnuovo-Mumford regularity of F/N over a polynomial ring, read off
/// the minimal graded free resolution.
int regularity_quotient(const QuotientModule& X);

/// Bounded G-dimension evidence: Ext vanishing against R for the depth(R)-th
/// syzygy and its dual, plus the biduality isomorphism test. Non-vanishing
/// yields an exact infinite verdict.
HdimReport gdim_evidence(const Submodule& N, int bound);
HdimReport gdim_evidence_quotient(const QuotientModule& X, int bound);

} // namespace rrlab

#endif
