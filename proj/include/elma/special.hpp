#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elma/sieve.hpp"

namespace elma {

/// True for residues {5, 11, 17}, i.e. r == 5 (mod 6). Classes {1, 7, 13} map
/// under 2p+1 into {3, 15, 9} and can never yield a safe prime.
bool sophie_admissible(ReducedResidue r);

/// (2r + 1) mod 18, the class of 2p + 1 for p in class r.
int safe_prime_image_residue(ReducedResidue r);

struct SophieReport {
    u64 p;
    bool class_admissible; // p mod 18 in {5, 11, 17}
    ResidueClassification image; // classification of 2p + 1
    bool image_prime;
    bool is_sophie_germain;
    bool outlier; // p == 3, admitted despite sitting outside the reduced classes
};

/// p and 2p+1 both prime. Inadmissible classes short-circuit to false without
/// a primality test; 3 passes with the outlier flag, 2 is reported false
/// (outside the odd system).
SophieReport sophie_report(u64 p);

enum class MersenneSource {
    non_sg_class, // p == 1 (mod 6): value lands in class 1
    sg_class,     // p == 5 (mod 6): value lands in class 13
    unique_p3,    // p == 3: the one class-7 Mersenne prime, 7
    seven_multiple, // p == 3 (mod 6), p > 3: class 7 and divisible by 7
    even_outlier, // even p; the value is divisible by 3 (p == 2 gives 3 itself)
};

const char* mersenne_source_name(MersenneSource s);

struct MersenneReport {
    u64 p;
    u64 value;             // 2^p - 1
    int predicted_residue; // from the period-6 cycle of 2^k mod 18
    MersenneSource source_kind;
    bool divisible_by_7;
};

/// Classifies 2^p - 1 by p mod 6. Accepts 2 <= p <= 64 (the value must fit 64
/// bits); E_OUT_OF_RANGE otherwise.
MersenneReport mersenne_classify(u64 p);

/// Recovers p from m = 2^p - 1 by bit pattern (no floating point);
/// E_NOT_MERSENNE_FORM unless m + 1 is a power of two.
MersenneReport mersenne_source(u64 m);

enum class PerfectType {
    sg_type,     // p == 5 (mod 6)
    non_sg_type, // p == 1 (mod 6)
    unique_p3,   // p == 3 (perfect number 28)
    outlier,     // even p (6 has residue 6, not 10) or p == 3 (mod 6), p > 3
};

const char* perfect_type_name(PerfectType t);

struct PerfectReport {
    u64 p;
    bool mersenne_prime; // 2^p - 1 prime (reference-oracle trial division)
    u128 perfect;        // 2^(p-1) * (2^p - 1)
    int residue_mod_18;
    PerfectType type;
    bool outlier; // p == 2
    // Evidence for the two plus-one conjectures, reported, never asserted:
    int plus_one_residue;
    bool plus_one_divisible_by_7;       // claimed for SG-type perfects
    std::optional<bool> plus_one_prime; // claimed for non-SG-type; checked when feasible
};

inline constexpr u64 kDefaultPerfectExponentCap = 61;

/// Evaluates 2^(p-1)(2^p - 1) exactly and reports the residue evidence.
/// E_OUT_OF_RANGE for p < 2 or p beyond the exponent cap.
PerfectReport perfect_evaluate(u64 p, u64 exponent_cap = kDefaultPerfectExponentCap);

std::string u128_to_string(u128 v);

struct TwinProductRecord {
    u64 p;       // smaller twin
    u64 q;       // p + 2
    u64 product; // p * q, a class-17 member for p > 3
    const SeedPair* seed; // class-17 seed; nullptr for the flagged (3,5)
    u64 a;
    u64 b;
    u64 multiplicity; // 1 for every system record
    bool outlier;     // the (3,5) pair, outside the reduced classes
};

/// All twin prime pairs with product <= limit, found as multiplicity-1 hits on
/// the class-17 diagonals: seeds 5x7 and 11x13 with a == b, seed 17x1 with the
/// unit index one ahead. The (3,5) outlier is prepended with a flag.
std::vector<TwinProductRecord> twin_product_search(u64 limit, u64 cap = kDefaultSieveCap);

/// Twin prime pairs (p, p+2) with p + 2 <= limit where both members are Sophie
/// Germain primes. Only (3, 5) can appear.
std::vector<std::pair<u64, u64>> sg_twin_exclusion(u64 limit);

} // namespace elma
