/**
 * @file corpus.hpp
 * @brief Runs the bundled script corpus and compares recorded invariants
 *        against the golden values stored beside the scripts.
 */
#ifndef RRLAB_CORPUS_HPP
#define RRLAB_CORPUS_HPP

#include "rrlab/runner.hpp"

namespace rrlab {

struct CorpusOptions {
    std::string dir = "corpus";
    RunConfig run;
    int jobs = 0;            // 0: one thread per entry up to the hardware count
    bool emit_golden = false;
    std::string golden_path; // defaults to <dir>/golden.json
};

/// Runs every *.alg script in the corpus directory (sorted by name),
/// merges the reports, and checks the recorded rho/reg/depth invariants
/// against the golden file.
VerificationReport corpus_run(const CorpusOptions& opts, std::ostream& out);

} // namespace rrlab

#endif
