#include "doctest.h"

#include "elma/oracle.hpp"
#include "elma/special.hpp"

using namespace elma;

TEST_CASE("sophie admissibility is r == 5 mod 6") {
    CHECK_FALSE(sophie_admissible(ReducedResidue{7}));
    CHECK(sophie_admissible(ReducedResidue{11}));
    CHECK_FALSE(sophie_admissible(ReducedResidue{1}));
    CHECK(sophie_admissible(ReducedResidue{5}));
    CHECK(sophie_admissible(ReducedResidue{17}));
    CHECK_FALSE(sophie_admissible(ReducedResidue{13}));
}

TEST_CASE("safe prime image residues") {
    CHECK(safe_prime_image_residue(ReducedResidue{13}) == 9);
    CHECK(safe_prime_image_residue(ReducedResidue{7}) == 15);
    CHECK(safe_prime_image_residue(ReducedResidue{5}) == 11);
    CHECK(safe_prime_image_residue(ReducedResidue{1}) == 3);
    CHECK(safe_prime_image_residue(ReducedResidue{11}) == 5);
    CHECK(safe_prime_image_residue(ReducedResidue{17}) == 17);
    // Inadmissible classes map onto multiples of 3.
    for (int r : {1, 7, 13})
        CHECK(safe_prime_image_residue(ReducedResidue{r}) % 3 == 0);
}

TEST_CASE("sophie reports") {
    SophieReport r53 = sophie_report(53);
    CHECK(r53.is_sophie_germain);
    CHECK(r53.class_admissible);
    CHECK(r53.image.n == 107);
    CHECK_FALSE(r53.outlier);

    CHECK_FALSE(sophie_report(13).is_sophie_germain); // class 13 inadmissible
    CHECK(sophie_report(23).is_sophie_germain);       // safe prime 47

    SophieReport r3 = sophie_report(3);
    CHECK(r3.is_sophie_germain);
    CHECK(r3.outlier);
    CHECK_FALSE(r3.class_admissible);

    // 2 is classically Sophie Germain but sits outside the odd system.
    CHECK_FALSE(sophie_report(2).is_sophie_germain);

    CHECK(sophie_report(29).is_sophie_germain);       // 29 and 59 both prime
    CHECK_FALSE(sophie_report(47).is_sophie_germain); // admissible class, 95 = 5 * 19
    CHECK(sophie_report(47).class_admissible);
}

TEST_CASE("sophie scan agrees with the oracle below 20000") {
    auto table = oracle::prime_table(40'001);
    for (u64 p = 4; p <= 20'000; ++p) {
        bool classical = table[p] && table[2 * p + 1];
        REQUIRE(sophie_report(p).is_sophie_germain == classical);
        if (classical) {
            u64 r = p % 18;
            REQUIRE((r == 5 || r == 11 || r == 17));
        }
    }
}

TEST_CASE("mersenne classification by exponent") {
    MersenneReport m17 = mersenne_classify(17);
    CHECK(m17.value == 131071);
    CHECK(m17.predicted_residue == 13);
    CHECK(m17.source_kind == MersenneSource::sg_class);

    MersenneReport m19 = mersenne_classify(19);
    CHECK(m19.predicted_residue == 1);
    CHECK(m19.source_kind == MersenneSource::non_sg_class);

    MersenneReport m9 = mersenne_classify(9);
    CHECK(m9.value == 511);
    CHECK(m9.predicted_residue == 7);
    CHECK(m9.divisible_by_7);
    CHECK(m9.source_kind == MersenneSource::seven_multiple);

    MersenneReport m3 = mersenne_classify(3);
    CHECK(m3.value == 7);
    CHECK(m3.predicted_residue == 7);
    CHECK(m3.source_kind == MersenneSource::unique_p3);

    MersenneReport m2 = mersenne_classify(2);
    CHECK(m2.value == 3);
    CHECK(m2.source_kind == MersenneSource::even_outlier);

    CHECK_THROWS_AS(mersenne_classify(1), Error);
    CHECK_THROWS_AS(mersenne_classify(65), Error);
}

TEST_CASE("2^k mod 18 cycles with period 6 and predictions hold to 64") {
    int cycle[6] = {2, 4, 8, 16, 14, 10};
    u64 value = 1;
    for (u64 k = 1; k <= 64; ++k) {
        value = value * 2 % 18;
        CHECK(static_cast<int>(value) == cycle[(k - 1) % 6]);
    }
    for (u64 p = 2; p <= 64; ++p) {
        u64 m = p == 64 ? ~u64{0} : (u64{1} << p) - 1;
        MersenneReport report = mersenne_classify(p);
        CHECK(report.predicted_residue == static_cast<int>(m % 18));
        CHECK(report.divisible_by_7 == (m % 7 == 0));
    }
}

TEST_CASE("mersenne source recovery by bit pattern") {
    MersenneReport r = mersenne_source(131071);
    CHECK(r.p == 17);
    CHECK(r.source_kind == MersenneSource::sg_class);

    r = mersenne_source(8191);
    CHECK(r.p == 13);
    CHECK(r.predicted_residue == 1);
    CHECK(r.source_kind == MersenneSource::non_sg_class);

    CHECK_THROWS_AS(mersenne_source(100), Error);
    CHECK_THROWS_AS(mersenne_source(0), Error);
    CHECK_THROWS_AS(mersenne_source(1), Error); // p = 1 is below the rule
    CHECK(mersenne_source(~u64{0}).p == 64);
}

TEST_CASE("perfect number evaluation") {
    PerfectReport p5 = perfect_evaluate(5);
    CHECK(p5.perfect == 496);
    CHECK(p5.residue_mod_18 == 10);
    CHECK(p5.type == PerfectType::sg_type);
    CHECK(p5.mersenne_prime);
    CHECK(p5.plus_one_divisible_by_7); // 497 = 7 * 71
    CHECK(p5.plus_one_prime == std::optional<bool>{false});

    PerfectReport p7 = perfect_evaluate(7);
    CHECK(p7.perfect == 8128);
    CHECK(p7.residue_mod_18 == 10);
    CHECK(p7.type == PerfectType::non_sg_type);
    CHECK(p7.plus_one_residue == 11);
    CHECK(p7.plus_one_prime == std::optional<bool>{false}); // 8129 = 11 * 739

    PerfectReport p13 = perfect_evaluate(13);
    CHECK(p13.perfect == 33550336);
    CHECK(p13.residue_mod_18 == 10);

    PerfectReport p2 = perfect_evaluate(2);
    CHECK(p2.perfect == 6);
    CHECK(p2.residue_mod_18 == 6);
    CHECK(p2.outlier);

    PerfectReport p3 = perfect_evaluate(3);
    CHECK(p3.perfect == 28);
    CHECK(p3.residue_mod_18 == 10);
    CHECK(p3.type == PerfectType::unique_p3);

    PerfectReport p11 = perfect_evaluate(11);
    CHECK_FALSE(p11.mersenne_prime); // 2047 = 23 * 89

    CHECK_THROWS_AS(perfect_evaluate(1), Error);
    CHECK_THROWS_AS(perfect_evaluate(62), Error);

    CHECK(u128_to_string(p13.perfect) == "33550336");
    CHECK(u128_to_string(0) == "0");
}

TEST_CASE("perfect residue is 10 for odd prime exponents with prime mersenne") {
    for (u64 p : {5, 7, 13, 17, 19}) {
        PerfectReport report = perfect_evaluate(p);
        CHECK(report.mersenne_prime);
        CHECK(report.residue_mod_18 == 10);
    }
    for (u64 p : {5, 17})
        CHECK(perfect_evaluate(p).plus_one_divisible_by_7);
}

TEST_CASE("twin products come off the class-17 diagonals") {
    std::vector<TwinProductRecord> records = twin_product_search(400);
    REQUIRE(records.size() == 4); // (3,5) flagged, then (5,7), (11,13), (17,19)
    CHECK(records[0].p == 3);
    CHECK(records[0].outlier);
    CHECK(records[1].p == 5);
    CHECK(records[1].product == 35);
    CHECK(records[1].seed->id() == "5x7");
    CHECK(records[2].p == 11);
    CHECK(records[2].product == 143);
    CHECK(records[2].seed->id() == "11x13");
    CHECK(records[3].p == 17);
    CHECK(records[3].product == 323);
    CHECK(records[3].seed->id() == "17x1");
    CHECK(records[3].a == 0);
    CHECK(records[3].b == 1);

    std::vector<TwinProductRecord> wide = twin_product_search(60'000);
    bool saw_57599 = false, saw_5183 = false;
    for (const TwinProductRecord& rec : wide) {
        if (rec.product == 57599)
            saw_57599 = rec.p == 239 && rec.q == 241 && rec.seed->id() == "5x7" &&
                        rec.a == 13 && rec.b == 13 && rec.multiplicity == 1;
        if (rec.product == 5183)
            saw_5183 = rec.p == 71 && rec.q == 73 && rec.seed->id() == "17x1" &&
                       rec.a == 3 && rec.b == 4;
    }
    CHECK(saw_57599);
    CHECK(saw_5183);

    CHECK_THROWS_AS(twin_product_search(2'000, 1'000), Error);
}

TEST_CASE("twin product list matches the oracle") {
    constexpr u64 kLimit = 100'000;
    std::vector<TwinProductRecord> records = twin_product_search(kLimit);
    auto table = oracle::prime_table(400);
    std::vector<std::pair<u64, u64>> expected;
    for (u64 p = 3; p * (p + 2) <= kLimit; ++p)
        if (table[p] && table[p + 2])
            expected.emplace_back(p, p + 2);
    std::vector<std::pair<u64, u64>> actual;
    for (const TwinProductRecord& rec : records) {
        actual.emplace_back(rec.p, rec.q);
        if (!rec.outlier) {
            CHECK(rec.product % 18 == 17);
            CHECK(rec.multiplicity == 1);
            CHECK(rec.q == rec.p + 2);
        }
    }
    CHECK(actual == expected);
}

TEST_CASE("no twin pair beyond (3,5) is doubly Sophie Germain") {
    CHECK(sg_twin_exclusion(100) == std::vector<std::pair<u64, u64>>{{3, 5}});
    CHECK(sg_twin_exclusion(4).empty());
    CHECK(sg_twin_exclusion(20'000) == std::vector<std::pair<u64, u64>>{{3, 5}});
}

TEST_CASE("no perfect square lands in classes 5, 11 or 17") {
    for (u64 k = 1; k <= 1'000'000; ++k) {
        u64 r = (k * k) % 18;
        REQUIRE(r != 5);
        REQUIRE(r != 11);
        REQUIRE(r != 17);
    }
    // Squares of totatives land in {1, 7, 13} specifically.
    for (int r : kReducedResidues) {
        int sq = r * r % 18;
        CHECK((sq == 1 || sq == 7 || sq == 13));
    }
}
