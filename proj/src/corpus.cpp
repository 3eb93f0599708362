#include "rrlab/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>
#include <thread>

namespace rrlab {

namespace {

struct EntryResult {
    std::string name;
    std::string log;
    std::optional<VerificationReport> report;
    std::string error;
};

EntryResult run_entry(const std::string& name, const std::string& text, const RunConfig& cfg) {
    EntryResult res;
    res.name = name;
    std::ostringstream log;
    try {
        SessionScript script = parse_script(text);
        Runner runner(cfg, log);
        res.report = runner.run(script);
    } catch (const std::exception& ex) {
        res.error = ex.what();
    }
    res.log = log.str();
    return res;
}

// pulls the certified invariant values out of a battery report
Json extract_facts(const std::string& entry, const VerificationReport& report) {
    Json facts = Json::object();
    auto strip = [](const std::string& id) {
        auto l = id.find('[');
        auto r = id.rfind(']');
        return id.substr(l + 1, r - l - 1);
    };
    for (auto& c : report.checks()) {
        if (c.id.rfind("rho-le-reg[", 0) == 0) {
            std::string key = entry + ":" + strip(c.id);
            facts[key]["rho"] = c.certificate.at("rho");
            facts[key]["reg"] = c.certificate.at("reg");
        } else if (c.id.rfind("depth-positive[", 0) == 0) {
            std::string key = entry + ":" + strip(c.id);
            facts[key]["depth"] = c.certificate.at("depth");
        } else if (c.id.rfind("ring-regular[", 0) == 0) {
            std::string key = entry + ":" + strip(c.id);
            facts[key]["embdim"] = c.certificate.at("embdim");
            facts[key]["dim"] = c.certificate.at("dim");
            facts[key]["regular"] = c.certificate.at("regular");
        }
    }
    return facts;
}

} // namespace

VerificationReport corpus_run(const CorpusOptions& opts, std::ostream& out) {
    namespace fs = std::filesystem;
    Field field = opts.run.field_override.value_or(Field::rationals());
    VerificationReport report(field, opts.run.lab.seed);

    std::vector<std::pair<std::string, std::string>> entries; // name, text
    if (!fs::exists(opts.dir)) {
        CheckRecord rec;
        rec.id = "corpus-dir";
        rec.claim = "the corpus directory exists";
        rec.inputs = opts.dir;
        rec.pass = false;
        rec.mode = "info";
        report.add(std::move(rec));
        return report;
    }
    for (auto& e : fs::directory_iterator(opts.dir)) {
        if (e.path().extension() != ".alg") continue;
        std::ifstream in(e.path());
        std::stringstream ss;
        ss << in.rdbuf();
        entries.emplace_back(e.path().stem().string(), ss.str());
    }
    std::sort(entries.begin(), entries.end());

    unsigned jobs = opts.jobs > 0 ? static_cast<unsigned>(opts.jobs)
                                  : std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                                    static_cast<unsigned>(entries.size())));
    std::vector<EntryResult> results(entries.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < entries.size(); ++i)
            results[i] = run_entry(entries[i].first, entries[i].second, opts.run);
    } else {
        std::vector<std::future<EntryResult>> futures;
        for (auto& [name, text] : entries) {
            futures.push_back(std::async(std::launch::async, run_entry, name, text, opts.run));
        }
        for (std::size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
    }

    Json facts = Json::object();
    for (auto& res : results) {
        out << "== corpus entry " << res.name << " ==\n";
        if (!opts.run.quiet) out << res.log;
        if (!res.error.empty()) {
            CheckRecord rec;
            rec.id = "corpus-entry[" + res.name + "]";
            rec.claim = "the corpus entry runs to completion";
            rec.inputs = res.error;
            rec.pass = false;
            rec.mode = "certified";
            report.add(std::move(rec));
            continue;
        }
        for (auto rec : res.report->checks()) {
            rec.id = res.name + "/" + rec.id;
            report.add(std::move(rec));
        }
        Json f = extract_facts(res.name, *res.report);
        for (auto& [k, v] : f.items()) facts[k] = v;
    }

    std::string golden_path = opts.golden_path.empty()
                                  ? (fs::path(opts.dir) / "golden.json").string()
                                  : opts.golden_path;
    if (opts.emit_golden) {
        Json j;
        j["note"] = "invariant values recorded from a run confirmed by the degreewise linear-algebra oracle";
        j["facts"] = facts;
        std::ofstream o(golden_path);
        o << j.dump(2) << "\n";
        out << "golden values written to " << golden_path << "\n";
    } else if (fs::exists(golden_path)) {
        std::ifstream in(golden_path);
        Json golden = Json::parse(in);
        bool ok = true;
        std::string detail;
        for (auto& [key, expected] : golden.at("facts").items()) {
            if (!facts.contains(key)) {
                ok = false;
                detail = "missing fact " + key;
                break;
            }
            if (facts.at(key) != expected) {
                ok = false;
                detail = "fact " + key + " = " + facts.at(key).dump() + ", expected " + expected.dump();
                break;
            }
        }
        CheckRecord rec;
        rec.id = "golden-values";
        rec.claim = "recorded invariants match the stored golden values";
        rec.inputs = ok ? std::to_string(golden.at("facts").size()) + " facts" : detail;
        rec.pass = ok;
        rec.mode = "certified";
        rec.certificate = Json{{"path", golden_path}};
        report.add(std::move(rec));
    }
    return report;
}

} // namespace rrlab
