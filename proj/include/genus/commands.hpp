#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "genus/rational.hpp"

namespace genus {

// Parsed CLI invocation. Ranges are inclusive; a single value is a one-point
// range. Identical configs produce byte-identical output.
struct JobConfig {
    std::string command;               // table | moments | cylinder | series | verify
    std::string kind = "permutation";  // permutation|partition (cylinder: perm|part)
    int n_lo = -1, n_hi = -1;
    int g_lo = -1, g_hi = -1;
    int i_lo = 1, i_hi = 1;
    int j_lo = 1, j_hi = 1;
    int cutoff = -1;        // kappa index cutoff override
    long trunc = -1;        // series truncation override
    int oracle_limit = -1;  // enumeration size override
    std::string format = "json";  // json | csv | text
    std::string cache_dir;        // empty: $GENUSCOUNT_CACHE_DIR, else no cache
    int jobs = 1;
    std::string preset;        // empty = generic cumulants
    std::string custom_kappa;  // "1=1,2=1/2,..." (preset "custom")
    bool second_order_zero = false;
    std::vector<std::string> checks;  // verify subset
    std::optional<int> verify_n;      // verify scale override
};

std::pair<int, int> parse_range(const std::string& s);
std::map<int, Rational> parse_custom_kappa(const std::string& s);

// Executes one command, writing the report to `out`. Returns the process
// exit code; error diagnostics go to `err` as a single line.
int run_command(const JobConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace genus
