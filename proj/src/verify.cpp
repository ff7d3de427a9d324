#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "bench.hpp"
#include "elma/goldbach.hpp"
#include "elma/oracle.hpp"
#include "elma/sieve.hpp"
#include "elma/special.hpp"
#include "report.hpp"

namespace elma {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Reporter {
    std::ostream& out;
    bool all_passed = true;

    void report(const std::string& name, bool passed, const std::string& detail) {
        out << (passed ? "[PASS] " : "[FAIL] ") << name;
        if (!detail.empty())
            out << " -- " << detail;
        out << "\n";
        all_passed = all_passed && passed;
    }
};

const std::vector<u64> kClass13Composites = {49,  85,  121, 175, 247, 265, 301, 319,
                                             355, 391, 427, 445, 481, 517, 535, 553,
                                             589, 625, 679, 697, 715, 805};

const std::vector<u64> kClass13Primes = {13,  31,  67,  103, 139, 157, 193, 211,
                                         229, 283, 337, 373, 409, 463, 499, 571,
                                         607, 643, 661, 733, 751, 769, 787};

// The printed polynomial table: seed id -> (c0, cb, ca); cab is 324 for all.
const std::map<std::string, std::array<u64, 3>> kPrintedPolynomials = {
    {"1x1", {1, 18, 18}},     {"7x13", {91, 126, 234}},  {"11x5", {55, 198, 90}},
    {"17x17", {289, 306, 306}}, {"5x1", {5, 90, 18}},    {"11x7", {77, 198, 126}},
    {"13x17", {221, 234, 306}}, {"7x1", {7, 126, 18}},   {"5x5", {25, 90, 90}},
    {"13x13", {169, 234, 234}}, {"11x17", {187, 198, 306}}, {"11x1", {11, 198, 18}},
    {"5x13", {65, 90, 234}},  {"7x17", {119, 126, 306}}, {"13x1", {13, 234, 18}},
    {"7x7", {49, 126, 126}},  {"11x11", {121, 198, 198}}, {"17x5", {85, 306, 90}},
    {"17x1", {17, 306, 18}},  {"5x7", {35, 90, 126}},   {"11x13", {143, 198, 234}},
};

void check_census(Reporter& r) {
    auto t0 = Clock::now();
    ReducedResidue class13{13};
    std::vector<u64> composites = build_sieve(class13, 805).composite_values();
    std::vector<u64> primes = primes_in_class(class13, 805);
    double elapsed = seconds_since(t0);
    bool ok = composites == kClass13Composites && primes == kClass13Primes && elapsed < 1.0;
    std::ostringstream detail;
    detail << composites.size() << " composites, " << primes.size() << " primes up to 805 in "
           << elapsed << "s";
    r.report("1. class-13 census to 805 (22 composites / 23 primes)", ok, detail.str());
}

void check_worked_queries(Reporter& r) {
    auto t0 = Clock::now();
    MultiplicityReport q6313 = multiplicity(6313);
    MultiplicityReport q2267 = multiplicity(2267);
    MultiplicityReport q175 = multiplicity(175);
    MultiplicityReport q343 = multiplicity(343);
    double elapsed = seconds_since(t0);

    bool ok6313 = q6313.multiplicity == 1 && q6313.events.size() == 1 &&
                  q6313.events[0].seed->id() == "17x5" && q6313.events[0].a == 5 &&
                  q6313.events[0].b == 3 &&
                  q6313.factor_pairs == std::vector<std::pair<u64, u64>>{{59, 107}};
    bool ok2267 = q2267.multiplicity == 0 && q2267.verdict == Verdict::prime;
    bool ok175 = q175.multiplicity == 2;
    bool ok343 = q343.multiplicity == 1 &&
                 q343.factor_pairs == std::vector<std::pair<u64, u64>>{{7, 49}};
    bool ok = ok6313 && ok2267 && ok175 && ok343 && elapsed < 1.0;
    std::ostringstream detail;
    detail << "6313=" << (ok6313 ? "ok" : "BAD") << " 2267=" << (ok2267 ? "ok" : "BAD")
           << " 175=" << (ok175 ? "ok" : "BAD") << " 343=" << (ok343 ? "ok" : "BAD") << " in "
           << elapsed << "s";
    r.report("2. worked queries 6313 / 2267 / 175 / 343", ok, detail.str());
}

void check_oracle_equivalence(Reporter& r, u64 limit) {
    auto t0 = Clock::now();
    u64 checked = 0, mismatches = 0;
    for (u64 n = 5; n <= limit; ++n) {
        if (n % 2 == 0 || n % 3 == 0)
            continue;
        ++checked;
        MultiplicityReport engine = multiplicity(n);
        if (engine.multiplicity != oracle::oracle_multiplicity(n) ||
            (engine.verdict == Verdict::prime) != oracle::oracle_is_prime(n) ||
            !engine.divisor_count || *engine.divisor_count != oracle::divisor_count(n) ||
            engine.factor_pairs != oracle::factor_pairs(n)) {
            ++mismatches;
        }
    }

    // Bounded-sieve route: each class's value set equals the oracle's
    // composite members at the same limit.
    int classes_matching = 0;
    for (int residue : kReducedResidues) {
        std::vector<u64> values = build_sieve(ReducedResidue{residue}, limit).composite_values();
        std::vector<u64> expected;
        for (u64 n = residue; n <= limit; n += 18)
            if (n > 1 && !oracle::oracle_is_prime(n))
                expected.push_back(n);
        if (values == expected)
            ++classes_matching;
    }

    double elapsed = seconds_since(t0);
    bool ok = mismatches == 0 && classes_matching == 6 && elapsed < 300.0;
    std::ostringstream detail;
    detail << checked << " reduced-odd n in [5," << limit << "], " << mismatches
           << " mismatches; sieve value sets match in " << classes_matching
           << "/6 classes; " << elapsed << "s";
    r.report("3. oracle equivalence (multiplicity/primality/divisors/pairs/sieve)", ok,
             detail.str());
}

void check_seed_tables(Reporter& r) {
    bool ok = true;
    std::ostringstream detail;
    for (int residue : kReducedResidues) {
        ReducedResidue rr{residue};
        const auto& seeds = seeds_for(rr);

        // Regenerate the pair set from the closure property.
        std::vector<std::pair<int, int>> expected;
        for (std::size_t i = 0; i < kReducedResidues.size(); ++i)
            for (std::size_t j = i; j < kReducedResidues.size(); ++j)
                if (kReducedResidues[i] * kReducedResidues[j] % 18 == residue)
                    expected.emplace_back(kReducedResidues[i], kReducedResidues[j]);
        std::vector<std::pair<int, int>> actual;
        for (const SeedPair& s : seeds)
            actual.emplace_back(std::min(s.r1.value(), s.r2.value()),
                                std::max(s.r1.value(), s.r2.value()));
        std::sort(actual.begin(), actual.end());
        std::sort(expected.begin(), expected.end());
        if (actual != expected) {
            ok = false;
            detail << "class " << residue << " pair set mismatch; ";
        }

        std::size_t want = (residue == 1 || residue == 7 || residue == 13) ? 4 : 3;
        if (seeds.size() != want) {
            ok = false;
            detail << "class " << residue << " has " << seeds.size() << " seeds, want "
                   << want << "; ";
        }
        for (const SeedPair& s : seeds) {
            auto it = kPrintedPolynomials.find(s.id());
            PolyCoeffs p = s.poly();
            if (it == kPrintedPolynomials.end() || it->second[0] != p.c0 ||
                it->second[1] != p.cb || it->second[2] != p.ca || p.cab != 324) {
                ok = false;
                detail << "polynomial mismatch for " << s.id() << "; ";
            }
        }
    }
    r.report("4. seed tables regenerate from closure; printed polynomials match", ok,
             detail.str());
}

bool stream_equals(DeltaRowStream stream, std::initializer_list<u64> want) {
    for (u64 v : want)
        if (stream.next() != v)
            return false;
    return true;
}

void check_delta_streams(Reporter& r) {
    ReducedResidue class13{13}, class17{17};
    const SeedPair& s17x5 = seed_by_id(class13, "17x5");
    const SeedPair& s7x7 = seed_by_id(class13, "7x7");
    const SeedPair& s11x11 = seed_by_id(class13, "11x11");
    const SeedPair& s17x1 = seed_by_id(class17, "17x1");

    bool ok = true;
    DeltaRowStream right_fixed{s17x5, FixedSide::right, 0, 0};
    ok = ok && right_fixed.step() == 90 && stream_equals(right_fixed, {85, 175, 265, 355});
    DeltaRowStream left_fixed{s17x5, FixedSide::left, 0, 0};
    ok = ok && left_fixed.step() == 306 && stream_equals(left_fixed, {85, 391, 697, 1003});
    DeltaRowStream row7{s7x7, FixedSide::left, 0, 0};
    ok = ok && row7.step() == 126 && stream_equals(row7, {49, 175, 301, 427});

    DeltaDiagonalStream diag7{s7x7, DiagonalMode::equal_indices, 0};
    u64 v0 = diag7.next(), v1 = diag7.next(), v2 = diag7.next();
    ok = ok && v0 == 49 && v1 == 625 && v2 == 1849 && (v1 - v0) == 18 * 32 &&
         (v2 - v1) == 18 * 68;

    DeltaDiagonalStream diag11{s11x11, DiagonalMode::equal_indices, 0};
    ok = ok && diag11.next() == 121 && diag11.next() == 841 && diag11.next() == 2209;

    DeltaDiagonalStream twin{s17x1, DiagonalMode::unit_offset, 0};
    ok = ok && twin.next() == 323 && twin.next() == 1295 && twin.next() == 2915;

    r.report("5. delta streams (rows 90/306/126; diagonals +36 rule; twin 323/1295/2915)",
             ok, "");
}

void check_goldbach(Reporter& r, u64 limit) {
    auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream detail;

    const auto& templates_2 = templates_for(2);
    const GoldbachTemplate* t7_13 = nullptr;
    for (const GoldbachTemplate& t : templates_2)
        if (t.r1.value() == 7 && t.r2.value() == 13)
            t7_13 = &t;
    std::vector<SeesawPair> pairs = seesaw(92, *t7_13);
    std::vector<std::pair<u64, u64>> listed;
    std::vector<std::pair<u64, u64>> prime_pairs;
    for (const SeesawPair& p : pairs) {
        listed.emplace_back(p.x, p.y);
        if (p.x_prime && p.y_prime)
            prime_pairs.emplace_back(std::min(p.x, p.y), std::max(p.x, p.y));
    }
    std::sort(prime_pairs.begin(), prime_pairs.end());
    ok = ok && listed == std::vector<std::pair<u64, u64>>{
                             {7, 85}, {25, 67}, {43, 49}, {61, 31}, {79, 13}};
    ok = ok && prime_pairs == std::vector<std::pair<u64, u64>>{{13, 79}, {31, 61}};
    if (!ok)
        detail << "92 seesaw mismatch; ";

    std::vector<std::pair<u64, u64>> sol88 = goldbach_solutions(88);
    bool has = true;
    for (auto want : {std::pair<u64, u64>{5, 83}, {41, 47}, {29, 59}})
        has = has && std::find(sol88.begin(), sol88.end(), want) != sol88.end();
    ok = ok && has;
    for (auto [x, y] : {std::pair<u64, u64>{5, 83}, {41, 47}, {29, 59}}) {
        PairVerification v = verify_pair(x, y);
        if (v.multiplicity != 1 || !v.both_prime) {
            ok = false;
            detail << "verify_pair(" << x << "," << y << ") not multiplicity 1; ";
        }
    }

    std::vector<bool> table = oracle::prime_table(limit);
    u64 evens_checked = 0, sweep_mismatches = 0;
    for (u64 e = 10; e <= limit; e += 2) {
        std::vector<std::pair<u64, u64>> expected;
        for (u64 p = 5; p <= e / 2; ++p)
            if (p != 2 && p != 3 && table[p] && e - p != 2 && e - p != 3 && table[e - p])
                expected.emplace_back(p, e - p);
        if (goldbach_solutions(e) != expected)
            ++sweep_mismatches;
        ++evens_checked;
    }
    ok = ok && sweep_mismatches == 0;
    double elapsed = seconds_since(t0);
    ok = ok && elapsed < 120.0;
    detail << evens_checked << " even numbers to " << limit << ", " << sweep_mismatches
           << " mismatches in " << elapsed << "s";
    r.report("6. Goldbach seesaw 92/88 plus oracle sweep", ok, detail.str());
}

void check_sophie(Reporter& r, u64 scan_limit, u64 twin_limit) {
    auto t0 = Clock::now();
    std::vector<bool> table = oracle::prime_table(2 * scan_limit + 1);
    u64 sg_found = 0, class_violations = 0, report_mismatches = 0;
    for (u64 p = 4; p <= scan_limit; ++p) {
        bool classical = table[p] && table[2 * p + 1];
        if (classical) {
            ++sg_found;
            u64 residue = p % 18;
            if (residue != 5 && residue != 11 && residue != 17)
                ++class_violations;
        }
        if (sophie_report(p).is_sophie_germain != classical)
            ++report_mismatches;
    }
    std::vector<std::pair<u64, u64>> exclusion = sg_twin_exclusion(twin_limit);
    bool exclusion_ok = exclusion == std::vector<std::pair<u64, u64>>{{3, 5}};
    double elapsed = seconds_since(t0);
    bool ok = class_violations == 0 && report_mismatches == 0 && exclusion_ok;
    std::ostringstream detail;
    detail << sg_found << " SG primes in (3," << scan_limit << "], " << class_violations
           << " class violations, " << report_mismatches << " report mismatches, exclusion "
           << (exclusion_ok ? "= {(3,5)}" : "WRONG") << " in " << elapsed << "s";
    r.report("7. Sophie Germain classes {5,11,17}; only (3,5) is a double-SG twin pair", ok,
             detail.str());
}

void check_mersenne_perfect(Reporter& r) {
    bool ok = true;
    std::ostringstream detail;
    for (u64 p = 3; p <= 61; ++p) {
        u64 value = (u64{1} << p) - 1;
        if (mersenne_classify(p).predicted_residue != static_cast<int>(value % 18)) {
            ok = false;
            detail << "mersenne residue mismatch at p=" << p << "; ";
        }
    }
    for (u64 p : {5, 7, 13, 17, 19}) {
        PerfectReport report = perfect_evaluate(p);
        if (report.residue_mod_18 != 10 || !report.mersenne_prime) {
            ok = false;
            detail << "perfect p=" << p << " not residue 10; ";
        }
    }
    for (u64 p : {5, 17}) {
        if (!perfect_evaluate(p).plus_one_divisible_by_7) {
            ok = false;
            detail << "SG-type 7 | (N+1) fails at p=" << p << "; ";
        }
    }
    PerfectReport p7 = perfect_evaluate(7);
    auto f8129 = oracle::trial_factorize(8129).prime_powers;
    bool counterexample = p7.type == PerfectType::non_sg_type && p7.plus_one_residue == 11 &&
                          p7.plus_one_prime && !*p7.plus_one_prime &&
                          f8129 == decltype(f8129){{11, 1}, {739, 1}};
    if (!counterexample) {
        ok = false;
        detail << "p=7 plus-one counterexample (8129 = 11*739) not reported; ";
    }
    r.report("8. Mersenne residues by p mod 6; perfects are 10 mod 18; plus-one evidence",
             ok, detail.str());
}

void check_twins(Reporter& r, u64 limit) {
    auto t0 = Clock::now();
    std::vector<TwinProductRecord> records = twin_product_search(limit);

    std::vector<bool> table = oracle::prime_table(static_cast<u64>(std::sqrt(
                                                      static_cast<double>(limit))) +
                                                  4);
    std::vector<std::pair<u64, u64>> expected;
    for (u64 p = 3; p * (p + 2) <= limit; ++p)
        if (table[p] && table[p + 2])
            expected.emplace_back(p, p + 2);

    std::vector<std::pair<u64, u64>> actual;
    bool fields_ok = true;
    for (const TwinProductRecord& rec : records) {
        actual.emplace_back(rec.p, rec.q);
        if (rec.outlier)
            continue;
        if (rec.product % 18 != 17 || rec.multiplicity != 1)
            fields_ok = false;
    }
    bool has_323 = false, has_57599 = false;
    for (const TwinProductRecord& rec : records) {
        if (rec.product == 323)
            has_323 = rec.seed && rec.seed->id() == "17x1" && rec.a == 0 && rec.b == 1;
        if (rec.product == 57599)
            has_57599 = rec.seed && rec.seed->id() == "5x7" && rec.a == 13 && rec.b == 13;
    }
    double elapsed = seconds_since(t0);
    bool ok = actual == expected && fields_ok && (limit < 323 || has_323) &&
              (limit < 57599 || has_57599);
    std::ostringstream detail;
    detail << records.size() << " twin pairs with product <= " << limit << " in " << elapsed
           << "s";
    r.report("9. twin products match the oracle; 323 and 57599 carry the printed indices",
             ok, detail.str());
}

void check_determinism(Reporter& r) {
    ReducedResidue class13{13}, class17{17};
    std::ostringstream csv1, csv2, csv3;
    emit_sieve_csv(build_sieve(class13, 100'000, 1), csv1);
    emit_sieve_csv(build_sieve(class13, 100'000, 2), csv2);
    emit_sieve_csv(build_sieve(class13, 100'000, 3), csv3);
    bool sieve_ok = csv1.str() == csv2.str() && csv2.str() == csv3.str();

    std::string json1 = query_report(multiplicity(6313)).dump();
    std::string json2 = query_report(multiplicity(6313)).dump();
    bool json_ok = json1 == json2;

    std::ostringstream matrix;
    emit_matrix_csv(seed_by_id(class17, "17x1"), 2, 2, matrix);
    bool matrix_ok = matrix.str() == ",19,37\n17,323,629\n35,665,1295\n";

    bool ok = sieve_ok && json_ok && matrix_ok;
    std::ostringstream detail;
    detail << "sieve workers 1/2/3 " << (sieve_ok ? "identical" : "DIFFER") << "; json "
           << (json_ok ? "identical" : "DIFFER") << "; figure cells "
           << (matrix_ok ? "exact" : "WRONG");
    r.report("10. determinism across workers; fixed grid cells 323/629/665/1295", ok,
             detail.str());
}

void check_bench(Reporter& r) {
    std::ostringstream log;
    BenchResult result = run_bench(1'000'000'000'000ull, log);
    bool ok = result.samples.size() >= 2 && result.fitted_exponent >= 0.4 &&
              result.fitted_exponent <= 0.6;
    std::ostringstream detail;
    detail << "fitted exponent " << result.fitted_exponent
           << " over [1e6, 1e12] (target 0.5 +/- 0.1; cost ~ sqrt(n))";
    r.report("11. benchmark: query cost grows ~sqrt(n), not polynomial in bits", ok,
             detail.str());
}

} // namespace

VerifyOptions options_for_limit(u64 limit) {
    VerifyOptions o;
    o.oracle_limit = std::clamp<u64>(limit, 100, 1'000'000);
    o.goldbach_limit = std::clamp<u64>(limit / 100, 100, 10'000);
    o.sophie_limit = std::clamp<u64>(limit, 100, 1'000'000);
    o.sg_twin_limit = std::clamp<u64>(limit / 10, 100, 100'000);
    o.twin_limit = std::clamp<u64>(limit, 100, 1'000'000);
    return o;
}

bool run_verification(const VerifyOptions& options, std::ostream& out) {
    Reporter r{out};
    check_census(r);
    check_worked_queries(r);
    check_oracle_equivalence(r, options.oracle_limit);
    check_seed_tables(r);
    check_delta_streams(r);
    check_goldbach(r, options.goldbach_limit);
    check_sophie(r, options.sophie_limit, options.sg_twin_limit);
    check_mersenne_perfect(r);
    check_twins(r, options.twin_limit);
    check_determinism(r);
    if (options.run_bench)
        check_bench(r);
    out << (r.all_passed ? "verification passed" : "verification FAILED") << "\n";
    return r.all_passed;
}

} // namespace elma
