#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace elma::oracle {

// Independent ground truth used by tests and the CLI's verify mode. Plain
// trial division, kept deliberately separate from the mod-18 engine.

struct Factorization {
    std::uint64_t n;
    std::vector<std::pair<std::uint64_t, unsigned>> prime_powers; // ascending primes
};

Factorization trial_factorize(std::uint64_t n);

/// Number of unordered nontrivial factorizations: ceil((tau(n) - 2) / 2).
std::uint64_t oracle_multiplicity(std::uint64_t n);

std::uint64_t divisor_count(std::uint64_t n); // tau(n)

bool oracle_is_prime(std::uint64_t n);

/// All unordered pairs (x, y) with 1 < x <= y and x*y == n, ascending by x.
std::vector<std::pair<std::uint64_t, std::uint64_t>> factor_pairs(std::uint64_t n);

/// Flags [0..limit] with true at prime indices. Test-scale helper.
std::vector<bool> prime_table(std::uint64_t limit);

} // namespace elma::oracle
