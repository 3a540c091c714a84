#ifndef CUMULANTKIT_VERIFY_HPP
#define CUMULANTKIT_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cumulantkit/flavor.hpp"

namespace cumulantkit {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // first counterexample or witness value
};

struct VerifySuiteReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<CheckResult> checks;
    double wall_seconds = 0.0;

    bool pass() const;
    const CheckResult* first_failure() const;
    std::string to_text() const;  // deterministic, no timing
    std::string to_json_text() const;
};

struct VerifyOptions {
    int r = 2;
    int degree = 0;           // series truncation; 0 = suite default
    int order = 0;            // word length bound; 0 = suite default
    int max_n = 0;            // counts suite ground-set bound; 0 = default 8
    std::uint64_t seed = 42;
    int trials = 0;           // 0 = suite default
    int threads = 1;
    std::optional<Flavor> flavor; // restrict flavored suites
};

const std::vector<std::string>& suite_names();

/// Runs one named suite; throws std::invalid_argument for unknown names.
VerifySuiteReport run_suite(const std::string& suite, const VerifyOptions& options);

} // namespace cumulantkit

#endif
