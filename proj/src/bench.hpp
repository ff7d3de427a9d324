#pragma once

#include <iosfwd>
#include <vector>

#include "elma/residue.hpp"

namespace elma {

struct BenchSample {
    u64 n;
    double micros; // best-of-batches cost of one prime-verdict query
};

struct BenchResult {
    std::vector<BenchSample> samples;
    double fitted_exponent; // least-squares slope of log(cost) vs log(n)
};

/// Times prime-verdict queries on the largest prime below each power of ten
/// up to max_n (ladder starts at 10^6) and fits the cost growth. The query is
/// wheel trial division, so the exponent sits near 0.5: cost ~ sqrt(n),
/// exponential in the bit length of n.
BenchResult run_bench(u64 max_n, std::ostream& out);

} // namespace elma
