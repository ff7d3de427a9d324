#include "elma/residue.hpp"

#include <string>

namespace elma {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::out_of_range: return "E_OUT_OF_RANGE";
    case Errc::not_reduced: return "E_NOT_REDUCED";
    case Errc::constraint: return "E_CONSTRAINT";
    case Errc::excluded: return "E_EXCLUDED";
    case Errc::precondition: return "E_PRECONDITION";
    case Errc::not_mersenne_form: return "E_NOT_MERSENNE_FORM";
    case Errc::not_even_residue: return "E_NOT_EVEN_RESIDUE";
    case Errc::template_inapplicable: return "E_TEMPLATE_INAPPLICABLE";
    }
    return "E_UNKNOWN";
}

bool is_reduced_residue(int r) noexcept {
    return r == 1 || r == 5 || r == 7 || r == 11 || r == 13 || r == 17;
}

ReducedResidue::ReducedResidue(int value) : value_(value) {
    if (!is_reduced_residue(value))
        raise(Errc::not_reduced, "residue " + std::to_string(value) + " is not coprime to 18");
}

const char* parity_name(Parity p) { return p == Parity::odd ? "odd" : "even"; }

const char* kind_name(ClassKind k) {
    switch (k) {
    case ClassKind::reduced_odd: return "reduced-odd";
    case ClassKind::non_reduced_odd: return "non-reduced-odd";
    case ClassKind::even: return "even";
    }
    return "?";
}

ResidueClassification classify(u64 n) {
    if (n == 0)
        raise(Errc::out_of_range, "classify: n must be >= 1");
    int residue = static_cast<int>(n % 18);
    ClassKind kind;
    if (residue % 2 == 0)
        kind = ClassKind::even;
    else if (residue % 3 == 0)
        kind = ClassKind::non_reduced_odd;
    else
        kind = ClassKind::reduced_odd;
    return {n, n % 2 ? Parity::odd : Parity::even, residue, kind, n / 18};
}

int digit_sum_residue(u64 n) {
    // Digital root in [1,9], then the parity of n selects root or root+9.
    int root = static_cast<int>(1 + (n - 1) % 9);
    int candidate = (root % 2 == static_cast<int>(n % 2)) ? root : root + 9;
    return candidate % 18;
}

u64 class_element(ReducedResidue r, u64 a) {
    u128 v = static_cast<u128>(r.value()) + static_cast<u128>(18) * a;
    if (v > ~u64{0})
        raise(Errc::out_of_range, "class_element overflows 64 bits");
    return static_cast<u64>(v);
}

u64 class_sum(ReducedResidue r, u64 a_max) {
    // (a_max+1)/2 * (2r + 18*a_max); one factor is always even.
    u128 count = static_cast<u128>(a_max) + 1;
    u128 ends = static_cast<u128>(2 * r.value()) + static_cast<u128>(18) * a_max;
    u128 v = count * ends / 2;
    if (v > ~u64{0})
        raise(Errc::out_of_range, "class_sum overflows 64 bits");
    return static_cast<u64>(v);
}

u64 class_average(ReducedResidue r, u64 a_max) {
    u128 v = static_cast<u128>(r.value()) + static_cast<u128>(9) * a_max;
    if (v > ~u64{0})
        raise(Errc::out_of_range, "class_average overflows 64 bits");
    return static_cast<u64>(v);
}

ReducedResidue residue_product(ReducedResidue r1, ReducedResidue r2) {
    return ReducedResidue{(r1.value() * r2.value()) % 18};
}

ReducedResidue residue_power(ReducedResidue g, u64 k) {
    if (k == 0)
        raise(Errc::out_of_range, "residue_power: k must be >= 1");
    int acc = 1;
    int base = g.value();
    u64 e = k % 6; // every totative's order divides 6
    if (e == 0)
        e = 6;
    for (u64 i = 0; i < e; ++i)
        acc = acc * base % 18;
    return ReducedResidue{acc};
}

int negative_core(ReducedResidue r) noexcept { return r.value() - 18; }

} // namespace elma
