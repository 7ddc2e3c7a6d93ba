#include "ht/report.hpp"

namespace ht {

const char* const kArtifactVersion = "0.1.0";

void SuiteReport::fail(std::string case_id, nlohmann::json inputs, nlohmann::json expected, nlohmann::json got) {
    failures.push_back({std::move(case_id), std::move(inputs), std::move(expected), std::move(got)});
}

void SuiteReport::check(bool passed, const std::string& case_id, const nlohmann::json& inputs,
                        const nlohmann::json& expected, const nlohmann::json& got) {
    ++total_cases;
    if (!passed) fail(case_id, inputs, expected, got);
}

nlohmann::json SuiteReport::to_json(bool timing) const {
    nlohmann::json j;
    j["suite"] = suite;
    j["g"] = g;
    j["total_cases"] = total_cases;
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : failures)
        fs.push_back({{"case_id", f.case_id}, {"inputs", f.inputs}, {"expected", f.expected}, {"got", f.got}});
    j["failures"] = fs;
    j["elapsed_ms"] = timing ? elapsed_ms : 0.0;
    if (!notes.empty()) j["notes"] = notes;
    return j;
}

bool RunManifest::ok() const {
    for (const auto& r : reports)
        if (!r.ok()) return false;
    return true;
}

nlohmann::json RunManifest::to_json(bool timing) const {
    nlohmann::json j;
    j["artifact_version"] = artifact_version;
    j["seed"] = seed;
    std::size_t cases = 0, failures = 0;
    double ms = 0;
    nlohmann::json rs = nlohmann::json::array();
    for (const auto& r : reports) {
        cases += r.total_cases;
        failures += r.failures.size();
        ms += r.elapsed_ms;
        rs.push_back(r.to_json(timing));
    }
    j["total_cases"] = cases;
    j["total_failures"] = failures;
    j["elapsed_ms"] = timing ? ms : 0.0;
    j["reports"] = rs;
    return j;
}

}  // namespace ht
