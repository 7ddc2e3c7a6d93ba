// Named verification suites shared by the command-line tool and the
// acceptance runner.
#pragma once

#include "ht/report.hpp"

#include <string>
#include <vector>

namespace ht {

struct SuiteParams {
    int g = 3;
    unsigned long long seed = 0;
    std::size_t samples = 0;  // 0 selects the suite default
    std::size_t max_mem_mb = 0;  // 0 means no limit
};

struct SuiteInfo {
    std::string name;
    int g_min;
    int g_max;
    std::size_t default_samples;  // 0 for exhaustive suites
    std::string summary;
};

const std::vector<SuiteInfo>& suite_catalog();

/// Throws std::invalid_argument for an unknown suite or a genus outside the
/// suite's range.
SuiteReport run_suite(const std::string& name, const SuiteParams& params);

/// Every suite over its genus range capped at g_max.
RunManifest run_all(int g_max, const SuiteParams& base);

/// Parses HT_MAX_MEM (megabytes, optional K/M/G suffix); 0 when unset.
std::size_t max_mem_from_env();

}  // namespace ht
