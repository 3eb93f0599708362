// Command-line front end: run scripts or the bundled corpus.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rrlab/corpus.hpp"

namespace {

std::optional<rrlab::Field> parse_field(const std::string& s) {
    if (s.empty()) return std::nullopt;
    if (s == "q" || s == "Q") return rrlab::Field::rationals();
    if (s == "fp" || s == "Fp") return rrlab::Field::prime(32003);
    if (s.rfind("fp:", 0) == 0 || s.rfind("Fp:", 0) == 0)
        return rrlab::Field::prime(static_cast<std::uint32_t>(std::stoul(s.substr(3))));
    throw CLI::ValidationError("--field expects q or fp:<prime>");
}

int log_level() {
    const char* v = std::getenv("RRLAB_LOG");
    if (!v) return 0;
    std::string s(v);
    if (s == "debug") return 2;
    if (s == "info") return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for Ratliff-Rush filtrations, m-full splittings and regularity criteria"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string field_str;
    std::uint64_t seed = 0;
    int max_degree = 12;
    int attempts = 16;
    int evidence_bound = 0;
    bool json = false;
    bool timings = false;
    bool quiet = false;

    app.add_option("--field", field_str, "coefficient field: q or fp:<prime>");
    app.add_option("--seed", seed, "seed for the witness search");
    app.add_option("--max-degree", max_degree, "oracle degree bound");
    app.add_option("--attempts", attempts, "witness search attempts");
    app.add_option("--evidence-bound", evidence_bound, "Ext range for the evidence mode");
    app.add_flag("--json", json, "emit the JSON report on stdout");
    app.add_flag("--timings", timings, "include wall times in the JSON report");
    app.add_flag("--quiet", quiet, "suppress per-check log lines");

    std::string script_path;
    auto* run_cmd = app.add_subcommand("run", "run a script file");
    run_cmd->add_option("script", script_path, "script file")->required();

    std::string corpus_dir = "corpus";
    int jobs = 0;
    bool emit_golden = false;
    auto* corpus_cmd = app.add_subcommand("corpus", "run the bundled verification corpus");
    corpus_cmd->add_option("--dir", corpus_dir, "corpus directory");
    corpus_cmd->add_option("--jobs", jobs, "parallel corpus entries (0 = auto)");
    corpus_cmd->add_flag("--emit-golden", emit_golden, "record golden values instead of checking them");

    std::string print_path;
    auto* print_cmd = app.add_subcommand("print", "parse a script and print its canonical form");
    print_cmd->add_option("script", print_path, "script file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage errors exit with 2
    }

    rrlab::RunConfig cfg;
    try {
        cfg.field_override = parse_field(field_str);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    cfg.lab.seed = seed;
    cfg.lab.max_degree = max_degree;
    cfg.lab.attempts = attempts;
    cfg.lab.evidence_bound = evidence_bound;
    cfg.quiet = quiet || json;
    if (log_level() >= 2) rrlab::engine_options().self_check = true;

    try {
        if (run_cmd->parsed()) {
            std::ifstream in(script_path);
            if (!in) {
                std::cerr << "error: cannot open " << script_path << "\n";
                return 2;
            }
            std::stringstream ss;
            ss << in.rdbuf();
            rrlab::SessionScript script = rrlab::parse_script(ss.str());
            rrlab::Runner runner(cfg, std::cout);
            rrlab::VerificationReport report = runner.run(script);
            if (json) {
                std::cout << report.to_json(timings).dump(2) << "\n";
            } else {
                std::cout << "\n" << report.table();
            }
            return report.all_pass() ? 0 : 1;
        }
        if (corpus_cmd->parsed()) {
            rrlab::CorpusOptions opts;
            opts.dir = corpus_dir;
            opts.run = cfg;
            opts.jobs = jobs;
            opts.emit_golden = emit_golden;
            std::ostringstream sink;
            std::ostream& log = json ? static_cast<std::ostream&>(sink) : std::cout;
            rrlab::VerificationReport report = rrlab::corpus_run(opts, log);
            if (json) {
                std::cout << report.to_json(timings).dump(2) << "\n";
            } else {
                std::cout << "\n" << report.table();
            }
            return report.all_pass() ? 0 : 1;
        }
        if (print_cmd->parsed()) {
            std::ifstream in(print_path);
            if (!in) {
                std::cerr << "error: cannot open " << print_path << "\n";
                return 2;
            }
            std::stringstream ss;
            ss << in.rdbuf();
            std::cout << rrlab::pretty_print(rrlab::parse_script(ss.str()));
            return 0;
        }
    } catch (const rrlab::parse_error& ex) {
        std::cerr << "parse error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 2;
}
