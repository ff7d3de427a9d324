#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elma/seeds.hpp"

namespace elma {

inline constexpr u64 kDefaultSieveCap = 100'000'000; // refuse larger bounded sieves

/// One generation event: n = x*y with x = r1 + 18a, y = r2 + 18b under the
/// record's seed. Every unordered nontrivial factorization of a class member
/// appears as exactly one record.
struct CompositeRecord {
    u64 n;
    const SeedPair* seed;
    u64 a;
    u64 b;
    u64 x;
    u64 y;
};

/// Position of a record's seed in its class table; part of the canonical order.
int seed_index(const CompositeRecord& rec);

/// All generation events of one class up to `limit`, sorted by
/// (n, seed table position, a). The order is schedule-independent.
struct SieveMatrix {
    ReducedResidue class_residue;
    u64 limit;
    std::vector<CompositeRecord> records;

    /// Distinct composite class members <= limit, ascending.
    std::vector<u64> composite_values() const;
};

/// Enumerates every seed's constrained (a, b) grid up to `limit`. Work may be
/// split across `workers` threads; the merged result does not depend on the
/// worker count. Throws E_OUT_OF_RANGE when limit exceeds `cap`.
SieveMatrix build_sieve(ReducedResidue r, u64 limit, unsigned workers = 1,
                        u64 cap = kDefaultSieveCap);

enum class Verdict {
    prime,
    composite,
    unit,     // n == 1
    excluded, // gcd(n, 6) > 1; outside the reduced system
};

const char* verdict_name(Verdict v);

/// Direct single-integer query. Wheel trial division over candidate factors
/// coprime to 6 up to sqrt(n): Theta(sqrt(n)/3) divisions, not polynomial in
/// the bit length of n.
struct MultiplicityReport {
    u64 n = 0;
    Verdict verdict = Verdict::excluded;
    std::string exclusion_reason;      // set when verdict == excluded
    std::optional<u64> trivial_factor; // 2 or 3 when excluded and composite
    u64 multiplicity = 0;              // unordered nontrivial factorizations
    std::optional<u64> divisor_count;  // tau(n); absent for unit/excluded
    std::vector<std::pair<u64, u64>> factor_pairs; // x <= y, ascending by x
    std::vector<CompositeRecord> events;           // one per factorization
};

MultiplicityReport multiplicity(u64 n);

/// tau(n) = 2m + 2 - [n is a perfect square]; requires gcd(n,6) == 1, n > 1
/// (E_EXCLUDED otherwise).
u64 divisor_count(u64 n);

/// True primality for any n; 2 and 3 pass via the outlier shortcut, everything
/// else divisible by 2 or 3 fails, and reduced-odd n test as multiplicity 0.
bool is_prime(u64 n);

/// All unordered nontrivial factorizations (E_EXCLUDED for gcd(n,6) > 1, n == 1).
std::vector<std::pair<u64, u64>> factor_pairs(u64 n);

/// Class members <= limit that the sieve does not generate (complement
/// construction). The unit 1 is excluded from class 1's list.
std::vector<u64> primes_in_class(ReducedResidue r, u64 limit, unsigned workers = 1,
                                 u64 cap = kDefaultSieveCap);

/// Number of class primes strictly between two consecutive class composites:
/// (np2 - np1)/18 - 1. E_PRECONDITION unless np1 < np2 are composite class
/// members with no composite member between them.
u64 gap_prime_count(u64 np1, u64 np2, ReducedResidue r);

struct ClassCensus {
    u64 elements;
    u64 primes;
    u64 composites;
    double pnt_per_class_estimate; // (L/ln L - 2)/6; NaN when L < 2
};

ClassCensus census(ReducedResidue r, u64 limit, unsigned workers = 1,
                   u64 cap = kDefaultSieveCap);

enum class FixedSide { left, right };

/// Products along one row/column of a seed grid: the fixed factor stays, the
/// other index increments, so consecutive values differ by 18 * (fixed factor).
class DeltaRowStream {
  public:
    DeltaRowStream(const SeedPair& seed, FixedSide fixed, u64 a, u64 b);
    u64 next(); // current value, then advance; E_CONSTRAINT past the grid
    u64 step() const;

  private:
    const SeedPair* seed_;
    FixedSide fixed_;
    u64 a_, b_;
};

enum class DiagonalMode {
    equal_indices, // a == b
    unit_offset,   // unit-side index one ahead; the {17,1} twin arrangement
};

/// Products along a diagonal: both indices advance together and the per-step
/// delta/18 grows by exactly 36.
class DeltaDiagonalStream {
  public:
    DeltaDiagonalStream(const SeedPair& seed, DiagonalMode mode, u64 start_index);
    u64 next();
    std::pair<u64, u64> indices() const; // (a, b) of the value next() returns

  private:
    const SeedPair* seed_;
    DiagonalMode mode_;
    u64 k_;
};

} // namespace elma
