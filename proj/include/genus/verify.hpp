#pragma once

#include <optional>
#include <string>
#include <vector>

namespace genus {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // summary, or the first exact diff on failure
};

struct VerifyOptions {
    std::vector<std::string> only;  // run every check when empty
    std::optional<int> n_override;  // scale knob for the size-limited checks
    int jobs = 1;
};

std::vector<std::string> check_names();

// Runs the named checks (all by default) and returns results sorted by
// check name. Never throws for a failing check; failures are report content.
std::vector<CheckResult> run_checks(const VerifyOptions& opts = {});

}  // namespace genus
