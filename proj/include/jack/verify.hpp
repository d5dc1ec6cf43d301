#pragma once

#include <string>
#include <vector>

namespace jack {

struct SuiteInfo {
    std::string name;
    std::string module;
    std::string anchor;   // the identity being checked
};

struct SuiteResult {
    std::string name;
    std::string anchor;
    bool pass = false;
    std::string detail;   // first failure, or a short summary
    double seconds = 0;
};

struct VerifyOptions {
    int d = 0;   // overrides the size bound of suites that have one; 0 keeps the default
};

// Sorted by name.
const std::vector<SuiteInfo>& verify_suites();
bool is_suite(const std::string& name);

// Exceptions inside a suite are reported as failures.
SuiteResult run_suite(const std::string& name, const VerifyOptions& opt = {});

}  // namespace jack
