/**
 * @file report.hpp
 * @brief Check records and the machine-readable verification report.
 */
#ifndef RRLAB_REPORT_HPP
#define RRLAB_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "rrlab/scalar.hpp"

namespace rrlab {

using Json = nlohmann::ordered_json;

struct CheckRecord {
    std::string id;
    std::string claim;     // the property the check verifies, human readable
    std::string inputs;
    bool pass = true;
    std::string mode;      // certified | exact | heuristic | evidence | info | degenerate-excluded
    Json certificate;      // structured evidence for the verdict
    double wall_ms = 0.0;
    bool counts = true;    // info records do not gate the overall verdict
};

class VerificationReport {
public:
    VerificationReport(Field field, std::uint64_t seed) : field_(field), seed_(seed) {}

    void add(CheckRecord rec) { checks_.push_back(std::move(rec)); }
    void merge(const VerificationReport& other);

    const std::vector<CheckRecord>& checks() const { return checks_; }
    bool all_pass() const;
    std::size_t failures() const;

    Json to_json(bool include_timings) const;
    std::string table() const;

    const Field& field() const { return field_; }
    std::uint64_t seed() const { return seed_; }

private:
    Field field_;
    std::uint64_t seed_;
    std::vector<CheckRecord> checks_;
};

/// Scope timer filling a record's wall time.
class WallTimer {
public:
    WallTimer();
    double elapsed_ms() const;

private:
    long long start_ns_;
};

} // namespace rrlab

#endif
