#include "elma/special.hpp"

#include <algorithm>
#include <bit>

#include "elma/oracle.hpp"

namespace elma {

namespace {

constexpr u64 kPlusOnePrimalityBound = 100'000'000'000'000ull; // 1e14

// 2^k mod 18 for k >= 1: (2, 4, 8, 16, 14, 10) repeating.
int pow2_mod18(u64 k) {
    static constexpr int cycle[6] = {2, 4, 8, 16, 14, 10};
    return cycle[(k - 1) % 6];
}

MersenneSource mersenne_source_kind(u64 p) {
    if (p % 2 == 0)
        return MersenneSource::even_outlier;
    if (p == 3)
        return MersenneSource::unique_p3;
    switch (p % 6) {
    case 1: return MersenneSource::non_sg_class;
    case 5: return MersenneSource::sg_class;
    default: return MersenneSource::seven_multiple; // p == 3 (mod 6), p > 3
    }
}

} // namespace

bool sophie_admissible(ReducedResidue r) { return r.value() % 6 == 5; }

int safe_prime_image_residue(ReducedResidue r) { return (2 * r.value() + 1) % 18; }

SophieReport sophie_report(u64 p) {
    if (p > (~u64{0} - 1) / 2)
        raise(Errc::out_of_range, "sophie_report: 2p + 1 overflows 64 bits");
    u64 image_n = 2 * p + 1;
    SophieReport report{p, false, classify(image_n), false, false, false};
    int residue = static_cast<int>(p % 18);
    report.class_admissible = residue == 5 || residue == 11 || residue == 17;
    if (p == 3) {
        // The one admitted exception; 3 sits outside the reduced classes.
        report.image_prime = true; // 2*3 + 1 == 7
        report.is_sophie_germain = true;
        report.outlier = true;
        return report;
    }
    report.image_prime = is_prime(image_n);
    report.is_sophie_germain = report.class_admissible && is_prime(p) && report.image_prime;
    return report;
}

const char* mersenne_source_name(MersenneSource s) {
    switch (s) {
    case MersenneSource::non_sg_class: return "non-SG-class exponent";
    case MersenneSource::sg_class: return "SG-class exponent";
    case MersenneSource::unique_p3: return "the-unique-p=3";
    case MersenneSource::seven_multiple: return "class-7 multiple of 7";
    case MersenneSource::even_outlier: return "even exponent outlier";
    }
    return "?";
}

MersenneReport mersenne_classify(u64 p) {
    if (p < 2 || p > 64)
        raise(Errc::out_of_range, "mersenne_classify: exponent must be in [2, 64]");
    u64 value = p == 64 ? ~u64{0} : (u64{1} << p) - 1;
    int predicted = (pow2_mod18(p) + 17) % 18;
    return {p, value, predicted, mersenne_source_kind(p), p % 3 == 0};
}

MersenneReport mersenne_source(u64 m) {
    // m + 1 is a power of two exactly when m is a contiguous run of low 1-bits.
    if (m == 0 || (m & (m + 1)) != 0)
        raise(Errc::not_mersenne_form, std::to_string(m) + " + 1 is not a power of two");
    return mersenne_classify(static_cast<u64>(std::popcount(m)));
}

const char* perfect_type_name(PerfectType t) {
    switch (t) {
    case PerfectType::sg_type: return "SG-type";
    case PerfectType::non_sg_type: return "non-SG-type";
    case PerfectType::unique_p3: return "the-unique-p=3";
    case PerfectType::outlier: return "outlier";
    }
    return "?";
}

PerfectReport perfect_evaluate(u64 p, u64 exponent_cap) {
    u64 cap = std::min<u64>(exponent_cap, 64); // 2^(p-1)(2^p - 1) must fit 128 bits
    if (p < 2 || p > cap)
        raise(Errc::out_of_range,
              "perfect_evaluate: exponent must be in [2, " + std::to_string(cap) + "]");

    u64 mersenne = p == 64 ? ~u64{0} : (u64{1} << p) - 1;
    PerfectReport report{};
    report.p = p;
    report.mersenne_prime = oracle::oracle_is_prime(mersenne);
    report.perfect = (static_cast<u128>(1) << (p - 1)) * mersenne;
    report.residue_mod_18 = static_cast<int>(report.perfect % 18);

    if (p % 2 == 0) {
        report.type = PerfectType::outlier;
        report.outlier = true;
    } else if (p == 3) {
        report.type = PerfectType::unique_p3;
    } else if (p % 6 == 1) {
        report.type = PerfectType::non_sg_type;
    } else if (p % 6 == 5) {
        report.type = PerfectType::sg_type;
    } else {
        report.type = PerfectType::outlier;
    }

    u128 plus_one = report.perfect + 1;
    report.plus_one_residue = static_cast<int>(plus_one % 18);
    report.plus_one_divisible_by_7 = plus_one % 7 == 0;
    if (plus_one <= kPlusOnePrimalityBound)
        report.plus_one_prime = oracle::oracle_is_prime(static_cast<u64>(plus_one));
    return report;
}

std::string u128_to_string(u128 v) {
    if (v == 0)
        return "0";
    std::string digits;
    while (v > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::vector<TwinProductRecord> twin_product_search(u64 limit, u64 cap) {
    if (limit > cap)
        raise(Errc::out_of_range, "twin_product_search: limit " + std::to_string(limit) +
                                      " exceeds cap " + std::to_string(cap));
    std::vector<TwinProductRecord> out;
    if (limit >= 15)
        out.push_back({3, 5, 15, nullptr, 0, 0, 1, true});

    ReducedResidue class17{17};
    auto scan = [&](const SeedPair& seed, bool unit_offset) {
        for (u64 k = 0;; ++k) {
            u64 a = k;
            u64 b = unit_offset ? k + 1 : k;
            u64 product;
            try {
                product = evaluate_seed(seed, a, b);
            } catch (const Error&) {
                break; // overflow; far past any reachable limit
            }
            if (product > limit)
                break;
            MultiplicityReport report = multiplicity(product);
            if (report.multiplicity != 1)
                continue;
            u64 x = seed.r1.value() + 18 * a;
            u64 y = seed.r2.value() + 18 * b;
            out.push_back({std::min(x, y), std::max(x, y), product, &seed, a, b, 1, false});
        }
    };
    scan(seed_by_id(class17, "5x7"), false);
    scan(seed_by_id(class17, "11x13"), false);
    scan(seed_by_id(class17, "17x1"), true);

    std::sort(out.begin(), out.end(),
              [](const TwinProductRecord& l, const TwinProductRecord& r) { return l.p < r.p; });
    return out;
}

std::vector<std::pair<u64, u64>> sg_twin_exclusion(u64 limit) {
    std::vector<std::pair<u64, u64>> violations;
    auto both_sophie = [](u64 p, u64 q) {
        return sophie_report(p).is_sophie_germain && sophie_report(q).is_sophie_germain;
    };
    if (limit >= 5 && both_sophie(3, 5))
        violations.emplace_back(3, 5);
    // Twin pairs beyond (3,5) have p == 5 (mod 6).
    for (u64 p = 5; p + 2 <= limit; p += 6)
        if (is_prime(p) && is_prime(p + 2) && both_sophie(p, p + 2))
            violations.emplace_back(p, p + 2);
    return violations;
}

} // namespace elma
