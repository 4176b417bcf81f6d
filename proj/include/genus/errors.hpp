#pragma once

#include <stdexcept>

namespace genus {

// Error taxonomy. Callers are expected to distinguish these, so each failure
// mode gets its own type; all carry a one-line human-readable message.

// Series reciprocal requested for a series whose leading coefficient is not
// an invertible constant.
struct NonInvertibleLeading : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A coefficient was requested at or above the truncation order of a series.
// Truncated coefficients are unknown, never silently zero.
struct TruncationTooLow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact division left a nonzero remainder.
struct NotDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The genus formula produced an odd value of 2g. Mathematically impossible;
// indicates a bug in cycle bookkeeping.
struct OddGenusDefect : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A pair (sigma, tau) does not act transitively on the ground set.
struct Disconnected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exhaustive enumeration was requested beyond the configured size limit.
struct OracleLimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An integer partition does not sum to the expected n.
struct BadPartition : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPairwiseDistinct : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A series that must be regular at y=0 came out with negative-degree terms.
struct RegularityViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A genus was requested for which no closed formula exists.
struct UnsupportedGenus : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace genus
