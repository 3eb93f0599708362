/**
 * @file filtration.hpp
 * @brief The m-adic filtration lab: powers m^n M, Ratliff-Rush stages and
 *        rho(M), superficial elements, m-full submodules with the socle
 *        splitting, and the associated graded module via Rees elimination.
 */
#ifndef RRLAB_FILTRATION_HPP
#define RRLAB_FILTRATION_HPP

#include <random>

#include "rrlab/oracle.hpp"
#include "rrlab/resolution.hpp"

namespace rrlab {

struct LabConfig {
    std::uint64_t seed = 0;
    int attempts = 16;          // witness search attempts
    int max_degree = 12;        // oracle degree bound
    int power_bound = 20;       // finite-length certification bound
    int evidence_bound = 0;     // 0 means 2*nvars + 2
    int hilbert_check = 8;      // associated-graded cross-check bound
    int chain_window = 2;       // heuristic chain stabilization window
    std::uint32_t prime_floor = 1000; // smallest prime field allowed for witness search
};

/// Deterministic coefficient stream for witness search; the same integers are
/// drawn regardless of the field.
class CoeffStream {
public:
    explicit CoeffStream(std::uint64_t seed) : rng_(seed) {}
    long next() { return static_cast<long>(rng_() % 21) - 10; } // [-10, 10]
private:
    std::mt19937_64 rng_;
};

/// Associated graded module G(M) presented over P = k[y_1..y_d], graded by
/// filtration degree; all generators sit in degree 0.
struct AssocGraded {
    RingPtr P;
    int num_gens = 0;
    std::vector<int> internal_degrees; // degrees of the minimal generators of M
    Submodule relations;               // inside P^num_gens, shifts zero

    int piece_dim(int n) const;        // dim_k G(M)_n
};

struct SuperficialWitness {
    Polynomial form;                     // linear form in R
    int annihilator_dim = 0;             // k-dimension of (0 :_{G(M)} x*)
    std::map<int, int> annihilator_hilbert;
    std::optional<int> stabilization_index; // never computed; kept for reporting
};

enum class RRMode { chain, certified };

struct RRStage {
    int n = 0;
    Submodule power;
    Submodule closure;
    bool equal = false;
    int colon_exponent = 0; // exponent used by the certified route
};

struct RRReport {
    std::vector<RRStage> stages; // n = 0..reg_bound
    int rho = 0;
    int reg_bound = 0;
    Polynomial witness;
    std::string mode; // "certified-via-reg-bound" or "heuristic-window"
};

class FilteredModule {
public:
    FilteredModule(Submodule M, LabConfig cfg);

    const Submodule& module() const { return M_; }
    const RingPtr& ring() const { return M_.ring(); }
    const LabConfig& config() const { return cfg_; }

    /// m^n M with trimmed generators, cached.
    const Submodule& power(int n);

    int depth(); // depth of M, cached

    const SuperficialWitness& witness();
    const AssocGraded& graded();
    int regularity(); // of G(M) over P

    /// Certified Ratliff-Rush stage; needs positive depth.
    Submodule ratliff_rush(int n);
    /// Heuristic chain mode with the consecutive-equality window.
    Submodule ratliff_rush_chain(int n, bool* stabilized = nullptr);

    RRReport rho_report();
    bool depth_graded_positive(); // rho == 0

private:
    Submodule M_;
    LabConfig cfg_;
    std::vector<Submodule> powers_;
    std::optional<int> depth_;
    std::optional<SuperficialWitness> witness_;
    std::optional<AssocGraded> graded_;
    std::optional<int> reg_;
    std::map<int, Submodule> rr_;
    std::optional<RRReport> rho_;
};

/// Builds G(M) by eliminating t from the Rees presentation and setting the
/// x-variables to zero; cross-checks Hilbert values against the power
/// filtration up to the configured bound.
AssocGraded assoc_graded(FilteredModule& Mf);

/// Tests filter-regularity of the initial form of a linear form on G(M):
/// the annihilator (0 : x*) must have Krull dimension <= 0. Exact.
std::optional<SuperficialWitness> superficial_certificate(FilteredModule& Mf, const Polynomial& linear_form);

/// Random search for a superficial element; deterministic in the seed.
SuperficialWitness find_superficial(FilteredModule& Mf);

struct MFullWitnessReport {
    bool m_full = false;
    bool exact = false; // positive answers are exact, negative ones heuristic
    std::optional<Polynomial> witness;
    std::vector<std::pair<Polynomial, Submodule>> failures; // tried form, strictly larger colon
};

/// Tests (m N :_M x) = N, searching for a witness when none is supplied.
MFullWitnessReport is_m_full(const Submodule& N, const Submodule& M, FilteredModule* ambient_for_witness,
                             const std::optional<Polynomial>& given, const LabConfig& cfg);

struct MFullSplitReport {
    Polynomial witness;
    Submodule colon_x, colon_m;
    bool colon_equal = false;
    std::vector<VectorPoly> socle_basis; // p_1..p_l, representatives of (N : m)/N
    std::vector<VectorPoly> completion;  // z_1..z_m completing {x p_i} to a minimal basis of N
    int socle_dim = 0;                   // l, equal to kdim((N : m)/N)
    std::vector<VectorPoly> nxn_basis;   // lift basis of the relevant pieces of N/xN
    std::vector<int> nxn_degrees;
    std::vector<Vec> psi_cols;           // column i: class of x p_i in the lift basis
    std::vector<Vec> phibar_cols;        // column per lift-basis element: its image in W
    bool split_identity = false;         // phibar composed with psi is the identity
    int well_defined_checks = 0;
    bool well_defined_ok = true;
};

/// The full m-full split package for a verified witness x.
MFullSplitReport mfull_split(const Submodule& N, const Submodule& M, const Polynomial& x,
                             const LabConfig& cfg);

} // namespace rrlab

#endif
