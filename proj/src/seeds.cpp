#include "elma/seeds.hpp"

#include <algorithm>
#include <array>

namespace elma {

namespace {

SeedConstraint constraint_for(int r1, int r2) {
    if (r1 == 1 && r2 == 1)
        return SeedConstraint::unit_excluded_unordered;
    if (r2 == 1)
        return SeedConstraint::unit_excluded;
    if (r1 == r2)
        return SeedConstraint::unordered;
    return SeedConstraint::free_indices;
}

SeedPair make_seed(int r1, int r2) {
    ReducedResidue a{r1}, b{r2};
    return SeedPair{a, b, residue_product(a, b), constraint_for(r1, r2)};
}

// Pair sequence per class as the table prints it (unit seed first).
std::vector<SeedPair> build_class(int r) {
    static constexpr std::array<std::array<int, 2>, 3> tails_1{{{7, 13}, {11, 5}, {17, 17}}};
    static constexpr std::array<std::array<int, 2>, 2> tails_5{{{11, 7}, {13, 17}}};
    static constexpr std::array<std::array<int, 2>, 3> tails_7{{{5, 5}, {13, 13}, {11, 17}}};
    static constexpr std::array<std::array<int, 2>, 2> tails_11{{{5, 13}, {7, 17}}};
    static constexpr std::array<std::array<int, 2>, 3> tails_13{{{7, 7}, {11, 11}, {17, 5}}};
    static constexpr std::array<std::array<int, 2>, 2> tails_17{{{5, 7}, {11, 13}}};

    std::vector<SeedPair> seeds;
    seeds.push_back(make_seed(r, 1));
    auto append = [&](auto const& tails) {
        for (auto [x, y] : tails)
            seeds.push_back(make_seed(x, y));
    };
    switch (r) {
    case 1: append(tails_1); break;
    case 5: append(tails_5); break;
    case 7: append(tails_7); break;
    case 11: append(tails_11); break;
    case 13: append(tails_13); break;
    case 17: append(tails_17); break;
    }
    return seeds;
}

} // namespace

const char* constraint_name(SeedConstraint c) {
    switch (c) {
    case SeedConstraint::free_indices: return "free";
    case SeedConstraint::unit_excluded: return "unit-excluded";
    case SeedConstraint::unordered: return "unordered";
    case SeedConstraint::unit_excluded_unordered: return "unit-excluded-unordered";
    }
    return "?";
}

std::string SeedPair::id() const {
    return std::to_string(r1.value()) + "x" + std::to_string(r2.value());
}

PolyCoeffs SeedPair::poly() const {
    return {static_cast<u64>(r1.value()) * r2.value(), static_cast<u64>(18) * r1.value(),
            static_cast<u64>(18) * r2.value(), 324};
}

u64 SeedPair::min_a() const {
    return constraint == SeedConstraint::unit_excluded_unordered ? 1 : 0;
}

u64 SeedPair::min_b(u64 a) const {
    switch (constraint) {
    case SeedConstraint::free_indices: return 0;
    case SeedConstraint::unit_excluded: return 1;
    case SeedConstraint::unordered: return a;
    case SeedConstraint::unit_excluded_unordered: return std::max<u64>(a, 1);
    }
    return 0;
}

bool SeedPair::allows(u64 a, u64 b) const { return a >= min_a() && b >= min_b(a); }

const std::vector<SeedPair>& seeds_for(ReducedResidue r) {
    static const std::array<std::vector<SeedPair>, 6> tables = [] {
        std::array<std::vector<SeedPair>, 6> t;
        for (std::size_t i = 0; i < kReducedResidues.size(); ++i)
            t[i] = build_class(kReducedResidues[i]);
        return t;
    }();
    for (std::size_t i = 0; i < kReducedResidues.size(); ++i)
        if (kReducedResidues[i] == r.value())
            return tables[i];
    raise(Errc::not_reduced, "no seed table for residue " + std::to_string(r.value()));
}

const SeedPair* find_seed(ReducedResidue class_residue, int rx, int ry) {
    for (const SeedPair& s : seeds_for(class_residue)) {
        if ((s.r1.value() == rx && s.r2.value() == ry) ||
            (s.r1.value() == ry && s.r2.value() == rx))
            return &s;
    }
    return nullptr;
}

const SeedPair& seed_by_id(ReducedResidue class_residue, const std::string& id) {
    for (const SeedPair& s : seeds_for(class_residue))
        if (s.id() == id)
            return s;
    raise(Errc::constraint, "seed " + id + " does not belong to class " +
                                std::to_string(class_residue.value()));
}

PolyCoeffs polynomial_coeffs(const SeedPair& seed) { return seed.poly(); }

u64 evaluate_seed(const SeedPair& seed, u64 a, u64 b) {
    if (!seed.allows(a, b))
        raise(Errc::constraint, "seed " + seed.id() + " forbids (a=" + std::to_string(a) +
                                    ", b=" + std::to_string(b) + ")");
    u128 x = static_cast<u128>(seed.r1.value()) + static_cast<u128>(18) * a;
    u128 y = static_cast<u128>(seed.r2.value()) + static_cast<u128>(18) * b;
    if (x > ~u64{0} || y > ~u64{0})
        raise(Errc::out_of_range, "seed factor overflows 64 bits");
    u128 v = x * y;
    if (v > ~u64{0})
        raise(Errc::out_of_range, "seed product overflows 64 bits");
    return static_cast<u64>(v);
}

} // namespace elma
