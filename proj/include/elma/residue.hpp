#pragma once

#include <array>
#include <cstdint>

#include "elma/errors.hpp"

namespace elma {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline constexpr int kModulus = 18;

/// The six totatives of 18. Every integer coprime to 6 falls in one of these
/// congruence classes mod 18.
inline constexpr std::array<int, 6> kReducedResidues{1, 5, 7, 11, 13, 17};

bool is_reduced_residue(int r) noexcept;

/// A value from {1, 5, 7, 11, 13, 17}; construction validates membership.
class ReducedResidue {
  public:
    explicit ReducedResidue(int value);
    int value() const noexcept { return value_; }
    operator int() const noexcept { return value_; }

    friend bool operator==(ReducedResidue a, ReducedResidue b) noexcept {
        return a.value_ == b.value_;
    }

  private:
    int value_;
};

enum class Parity { odd, even };

enum class ClassKind {
    reduced_odd,     // residue in {1,5,7,11,13,17}, i.e. gcd(n,6) == 1
    non_reduced_odd, // residue in {3,9,15}
    even,
};

struct ResidueClassification {
    u64 n;
    Parity parity;
    int residue; // n mod 18
    ClassKind kind;
    u64 cycle; // n == residue + 18*cycle
};

const char* parity_name(Parity p);
const char* kind_name(ClassKind k);

/// Splits n into residue mod 18 and cycle count. Rejects n == 0.
ResidueClassification classify(u64 n);

/// Residue mod 18 via the digital-root route: take the digital root of n,
/// then pick whichever of {root, root+9} matches n's parity (mod 18).
/// Agrees with n % 18 for every n >= 1.
int digit_sum_residue(u64 n);

/// r + 18a, the a-th element of class r.
u64 class_element(ReducedResidue r, u64 a);

/// Sum of r, r+18, ..., r+18*a_max (closed form, exact).
u64 class_sum(ReducedResidue r, u64 a_max);

/// Mean of the first a_max+1 class elements: r + 9*a_max. Lands on a class
/// element for even a_max and on an even value for odd a_max.
u64 class_average(ReducedResidue r, u64 a_max);

/// (r1*r2) mod 18; the totatives are closed under multiplication.
ReducedResidue residue_product(ReducedResidue r1, ReducedResidue r2);

/// g^k mod 18. Orders: 1->1, 17->2, {7,13}->3, {5,11}->6; 5 and 11 generate
/// the full reduced system.
ReducedResidue residue_power(ReducedResidue g, u64 k);

/// r - 18, the negative-core pairing: {1,5,7,11,13,17} -> {-17,-13,-11,-7,-5,-1}.
int negative_core(ReducedResidue r) noexcept;

} // namespace elma
