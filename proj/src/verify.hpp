#pragma once

#include <iosfwd>

#include "elma/residue.hpp"

namespace elma {

// The acceptance checks behind `elma18 verify` and the acceptance test
// binary. Every tolerance is pinned here; each check prints one
// [PASS]/[FAIL] line.

struct VerifyOptions {
    u64 oracle_limit = 1'000'000;  // oracle-equivalence sweep over n coprime to 6
    u64 goldbach_limit = 10'000;   // even numbers checked against the oracle
    u64 sophie_limit = 1'000'000;  // Sophie Germain class scan
    u64 sg_twin_limit = 100'000;   // both-Sophie twin exclusion scan
    u64 twin_limit = 1'000'000;    // twin-product search bound
    bool run_bench = true;         // timing-based growth-exponent check
};

/// Bounds scaled from a single `--limit` knob; never above the defaults.
VerifyOptions options_for_limit(u64 limit);

/// Runs all checks, one line each; true when everything passed.
bool run_verification(const VerifyOptions& options, std::ostream& out);

} // namespace elma
