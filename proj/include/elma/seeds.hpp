#pragma once

#include <string>
#include <vector>

#include "elma/residue.hpp"

namespace elma {

/// Index-pair constraint attached to a seed. The taxonomy keeps 1 out as a
/// factor and counts each unordered factorization exactly once.
enum class SeedConstraint {
    free_indices,            // a >= 0, b >= 0 (r1 != r2, neither is 1)
    unit_excluded,           // a >= 0, b >= 1 (r2 == 1)
    unordered,               // 0 <= a <= b   (r1 == r2 != 1)
    unit_excluded_unordered, // 1 <= a <= b   (r1 == r2 == 1)
};

const char* constraint_name(SeedConstraint c);

/// Coefficients of (r1 + 18a)(r2 + 18b) = c0 + cb*b + ca*a + cab*a*b.
struct PolyCoeffs {
    u64 c0;  // r1 * r2
    u64 cb;  // 18 * r1
    u64 ca;  // 18 * r2
    u64 cab; // 324
};

/// One generating pair of a class, kept in the orientation the table prints:
/// products are (r1 + 18a)(r2 + 18b).
struct SeedPair {
    ReducedResidue r1;
    ReducedResidue r2;
    ReducedResidue class_residue; // r1 * r2 mod 18
    SeedConstraint constraint;

    std::string id() const; // "17x5", "7x7", "13x1", ...
    PolyCoeffs poly() const;
    u64 min_a() const;
    u64 min_b(u64 a) const; // smallest legal b for the given a
    bool allows(u64 a, u64 b) const;
    bool is_square() const { return r1 == r2; }
};

/// The seeds of class r in table order: the unit seed (r,1) first, then the
/// printed sequence. Classes 1, 7, 13 hold 4 seeds, classes 5, 11, 17 hold 3.
const std::vector<SeedPair>& seeds_for(ReducedResidue r);

/// Seed of `class_residue` whose unordered residue pair is {rx, ry};
/// nullptr when the product does not land in that class.
const SeedPair* find_seed(ReducedResidue class_residue, int rx, int ry);

/// Seed resolved from its canonical id ("17x5"); throws E_CONSTRAINT when the
/// id does not belong to the class.
const SeedPair& seed_by_id(ReducedResidue class_residue, const std::string& id);

PolyCoeffs polynomial_coeffs(const SeedPair& seed);

/// (r1 + 18a)(r2 + 18b); throws E_CONSTRAINT when (a, b) violates the seed's
/// constraint and E_OUT_OF_RANGE when the product overflows 64 bits.
u64 evaluate_seed(const SeedPair& seed, u64 a, u64 b);

} // namespace elma
