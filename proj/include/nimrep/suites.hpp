// SPDX-License-Identifier: MIT
// Named batteries of identity checks, run case-parallel, with JSON / CSV /
// table reports.
#pragma once

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace nimrep {

enum class CaseStatus { pass, fail, skipped };
std::string to_string(CaseStatus s);

struct CaseResult {
    std::string id;
    CaseStatus status = CaseStatus::fail;
    double measured = 0;  // usually the largest deviation found
    double expected = 0;
    double tol = 0;
    std::string note;
    double runtime_ms = 0;
};

struct SuiteReport {
    std::string suite;
    std::vector<CaseResult> cases;
    int passed = 0, failed = 0, skipped = 0;
};

struct SuiteOptions {
    int order = 40;     // series truncation
    int depth = 10;     // moment / path length bound for the infinite graphs
    double tol = 1e-9;  // floating tolerance
    std::uint64_t seed = 20240611;
    int jobs = 1;
};

const std::vector<std::string>& suite_names();  // without "all"
// Throws InvalidParameter for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

nlohmann::json to_json(const SuiteReport& r);
std::string report_csv(const SuiteReport& r);
std::string report_table(const SuiteReport& r);

}  // namespace nimrep
