#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "elma/sieve.hpp"

namespace elma {

inline constexpr u64 kDefaultGoldbachPairCap = 1'000'000;

/// One additive template for an even residue class: (r1 + 18a) + (r2 + 18b)
/// covers every class member once a + b is fixed to the right budget.
struct GoldbachTemplate {
    int lepi; // even residue in {0, 2, ..., 16}
    ReducedResidue r1;
    ReducedResidue r2;
    u64 a_min;      // 1 when r1 == 1 (no unit summand), else 0
    bool unordered; // r1 == r2: restrict to a <= b
    ReducedResidue product_class;  // r1 * r2 mod 18
    const SeedPair* product_seed;  // where x * y lands for verification
};

/// Templates of one even residue, in table order. Residues 0, 6, 12 carry
/// three templates, the rest two. E_NOT_EVEN_RESIDUE for anything else.
const std::vector<GoldbachTemplate>& templates_for(int lepi);

struct SeesawPair {
    u64 e;
    const GoldbachTemplate* tmpl;
    u64 a;
    u64 b; // a + b == (e - r1 - r2) / 18
    u64 x; // r1 + 18a
    u64 y; // r2 + 18b; x + y == e
    bool x_prime;
    bool y_prime;
};

/// Every decomposition of e under one template: a ascends from a_min while b
/// descends, both flags set by wheel primality. E_TEMPLATE_INAPPLICABLE when
/// (e - r1 - r2)/18 is not a nonnegative integer.
std::vector<SeesawPair> seesaw(u64 e, const GoldbachTemplate& t);

/// Prime + prime decompositions of e across all applicable templates,
/// deduplicated as unordered pairs and sorted ascending. Never uses 2 or 3.
/// E_OUT_OF_RANGE when the full enumeration would exceed pair_cap pairs.
std::vector<std::pair<u64, u64>> goldbach_solutions(u64 e,
                                                    u64 pair_cap = kDefaultGoldbachPairCap);

/// Lazy variant: walks the templates in lockstep with ascending a and stops at
/// the first prime + prime pair. Empty when e has no reduced-system solution.
std::optional<SeesawPair> goldbach_first(u64 e);

/// Multiplicative check of one candidate pair: n = x*y located in the product
/// seed; multiplicity 1 plus a matching event means both prime, except when n
/// is the cube of x (the one false-positive family). E_EXCLUDED for inputs not
/// coprime to 18 or equal to 1.
struct PairVerification {
    u64 x;
    u64 y;
    u64 n;
    u64 multiplicity;
    std::optional<CompositeRecord> event; // the event recovering (x, y), if present
    bool pair_matched;
    bool cube_caveat; // n == min(x,y)^3
    bool both_prime;
};

PairVerification verify_pair(u64 x, u64 y);

} // namespace elma
