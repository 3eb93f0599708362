#include "rrlab/report.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

namespace rrlab {

void VerificationReport::merge(const VerificationReport& other) {
    for (auto& c : other.checks_) checks_.push_back(c);
}

bool VerificationReport::all_pass() const {
    for (auto& c : checks_)
        if (c.counts && !c.pass) return false;
    return true;
}

std::size_t VerificationReport::failures() const {
    std::size_t n = 0;
    for (auto& c : checks_)
        if (c.counts && !c.pass) ++n;
    return n;
}

Json VerificationReport::to_json(bool include_timings) const {
    Json j;
    j["schema"] = 1;
    j["field"] = field_.name();
    j["seed"] = seed_;
    Json arr = Json::array();
    for (auto& c : checks_) {
        Json rec;
        rec["id"] = c.id;
        rec["claim"] = c.claim;
        rec["inputs"] = c.inputs;
        rec["verdict"] = c.pass ? "pass" : "fail";
        rec["mode"] = c.mode;
        if (!c.certificate.is_null()) rec["certificate"] = c.certificate;
        arr.push_back(std::move(rec));
    }
    j["checks"] = std::move(arr);
    j["pass"] = all_pass();
    if (include_timings) {
        Json t = Json::array();
        for (auto& c : checks_) {
            Json rec;
            rec["id"] = c.id;
            rec["wall_ms"] = c.wall_ms;
            t.push_back(std::move(rec));
        }
        j["timings"] = std::move(t);
    }
    return j;
}

std::string VerificationReport::table() const {
    std::ostringstream os;
    os << std::left << std::setw(44) << "check" << std::setw(22) << "mode" << std::setw(8) << "verdict"
       << "detail" << "\n";
    os << std::string(100, '-') << "\n";
    for (auto& c : checks_) {
        std::string detail = c.inputs;
        if (detail.size() > 48) detail = detail.substr(0, 45) + "...";
        os << std::left << std::setw(44) << (c.id.size() > 43 ? c.id.substr(0, 43) : c.id) << std::setw(22)
           << c.mode << std::setw(8) << (c.pass ? "pass" : "FAIL") << detail << "\n";
    }
    os << std::string(100, '-') << "\n";
    os << (all_pass() ? "all checks passed" : std::to_string(failures()) + " check(s) FAILED") << "\n";
    return os.str();
}

WallTimer::WallTimer() {
    start_ns_ = std::chrono::duration_cast<std::chrono::nanoseconds>(
                    std::chrono::steady_clock::now().time_since_epoch())
                    .count();
}

double WallTimer::elapsed_ms() const {
    long long now = std::chrono::duration_cast<std::chrono::nanoseconds>(
                        std::chrono::steady_clock::now().time_since_epoch())
                        .count();
    return static_cast<double>(now - start_ns_) / 1e6;
}

} // namespace rrlab
