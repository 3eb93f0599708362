/**
 * @file runner.hpp
 * @brief Executes parsed scripts against the algebra layers and drives the
 *        verification batteries.
 */
#ifndef RRLAB_RUNNER_HPP
#define RRLAB_RUNNER_HPP

#include <iosfwd>

#include "rrlab/filtration.hpp"
#include "rrlab/report.hpp"
#include "rrlab/script.hpp"

namespace rrlab {

struct RunConfig {
    std::optional<Field> field_override;
    LabConfig lab;
    bool quiet = false; // suppress the human log lines while running
};

/// Named entity in a session: a ring usable as a module over itself, an
/// ideal-generated submodule, or a quotient presentation (cyclic or coker).
struct Entity {
    enum class Kind { ring, submodule, quotient } kind = Kind::ring;
    RingPtr ring;
    std::optional<Submodule> sub;        // ideal modules and ring-as-module
    std::optional<QuotientModule> quot;  // cyclic and coker modules
    std::string name;

    bool filtrable() const { return kind != Kind::quotient; }
};

class Runner {
public:
    Runner(RunConfig cfg, std::ostream& out);

    /// Executes the whole script; domain errors carry command positions.
    VerificationReport run(const SessionScript& script);

    const std::map<std::string, Entity>& environment() const { return env_; }

private:
    void declare_ring(const RingDecl& decl);
    void declare_module(const ModuleDecl& decl);
    void execute(const Command& cmd, VerificationReport& report);

    Entity& lookup(const std::string& name, const Command& at);
    FilteredModule& filtered(const std::string& name, const Command& at);

    // command handlers
    void cmd_power(const Command& c, VerificationReport& r);
    void cmd_rr(const Command& c, VerificationReport& r);
    void cmd_rho(const Command& c, VerificationReport& r);
    void cmd_superficial(const Command& c, VerificationReport& r);
    void cmd_mfull(const Command& c, VerificationReport& r);
    void cmd_split(const Command& c, VerificationReport& r);
    void cmd_graded(const Command& c, VerificationReport& r);
    void cmd_resolve(const Command& c, VerificationReport& r);
    void cmd_depth(const Command& c, VerificationReport& r);
    void cmd_projdim(const Command& c, VerificationReport& r);
    void cmd_reg(const Command& c, VerificationReport& r);
    void cmd_gdim(const Command& c, VerificationReport& r);
    void cmd_regcrit(const Command& c, VerificationReport& r);
    void cmd_checks(const Command& c, VerificationReport& r);

    RunConfig cfg_;
    std::ostream& out_;
    std::map<std::string, Entity> env_;
    std::map<std::string, std::shared_ptr<FilteredModule>> filtered_;
};

/// Verifies the regularity criterion on one filtrable module: rho is
/// computed with its certificate, regularity of the ring is decided from the
/// embedding dimension, every m-adic stage in the window gets an exact
/// projective-dimension verdict, and the implication "finite at some stage
/// implies the ring is regular" is asserted. Ratliff-Rush stages below rho
/// and the cyclic quotients R/m^n are driven through the same assertion.
void verify_regularity_criterion(Entity& module_entity, FilteredModule& Mf, int n_max, bool evidence,
                                 const LabConfig& cfg, VerificationReport& report, std::ostream& out,
                                 bool quiet);

/// The per-module verification battery used by the corpus.
void module_battery(const std::string& name, FilteredModule& Mf, int n_max, const LabConfig& cfg,
                    VerificationReport& report, std::ostream& out, bool quiet);

} // namespace rrlab

#endif
