// Suite reports and run manifests.
#pragma once

#include <nlohmann/json.hpp>

#include <chrono>
#include <string>
#include <vector>

namespace ht {

struct CaseFailure {
    std::string case_id;
    nlohmann::json inputs;
    nlohmann::json expected;
    nlohmann::json got;
};

struct SuiteReport {
    std::string suite;
    int g = 0;
    std::size_t total_cases = 0;
    std::vector<CaseFailure> failures;
    double elapsed_ms = 0;
    // Suite-specific facts (expected exceptions, skip reasons, counts).
    nlohmann::json notes = nlohmann::json::object();

    bool ok() const { return failures.empty(); }
    void fail(std::string case_id, nlohmann::json inputs, nlohmann::json expected, nlohmann::json got);
    /// Counts one case and records a failure when !passed.
    void check(bool passed, const std::string& case_id, const nlohmann::json& inputs = {},
               const nlohmann::json& expected = true, const nlohmann::json& got = false);
    /// elapsed_ms is written as 0 when timing is off, which keeps reports
    /// byte-identical across runs.
    nlohmann::json to_json(bool timing = true) const;
};

/// Aggregate over several suites.
struct RunManifest {
    std::string artifact_version;
    unsigned long long seed = 0;
    std::vector<SuiteReport> reports;
    bool ok() const;
    nlohmann::json to_json(bool timing = true) const;
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

extern const char* const kArtifactVersion;

}  // namespace ht
