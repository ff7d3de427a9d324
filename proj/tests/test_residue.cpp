#include "doctest.h"

#include <numeric>
#include <set>

#include "elma/residue.hpp"

using namespace elma;

TEST_CASE("classify splits n into residue and cycle") {
    ResidueClassification c = classify(211);
    CHECK(c.residue == 13);
    CHECK(c.cycle == 11);
    CHECK(c.kind == ClassKind::reduced_odd);

    c = classify(18);
    CHECK(c.residue == 0);
    CHECK(c.cycle == 1);
    CHECK(c.kind == ClassKind::even);

    c = classify(85);
    CHECK(c.residue == 13);
    CHECK(c.cycle == 4);

    CHECK(classify(1).kind == ClassKind::reduced_odd);
    CHECK(classify(1).cycle == 0);
    CHECK(classify(2).kind == ClassKind::even);
    CHECK(classify(3).kind == ClassKind::non_reduced_odd);
    CHECK(classify(9).kind == ClassKind::non_reduced_odd);

    CHECK_THROWS_AS(classify(0), Error);
}

TEST_CASE("classify kind agrees with gcd(n, 6)") {
    for (u64 n = 1; n <= 2000; ++n) {
        bool reduced = std::gcd(n, u64{6}) == 1;
        CHECK((classify(n).kind == ClassKind::reduced_odd) == reduced);
    }
}

TEST_CASE("digit-sum route equals n mod 18") {
    CHECK(digit_sum_residue(1111) == 13);
    CHECK(digit_sum_residue(74) == 2);
    CHECK(digit_sum_residue(311) == 5);
    for (u64 n = 1; n <= 1'000'000; ++n)
        REQUIRE(digit_sum_residue(n) == static_cast<int>(n % 18));
}

TEST_CASE("class elements, sums and averages") {
    CHECK(class_element(ReducedResidue{17}, 6) == 125);
    CHECK(class_element(ReducedResidue{1}, 0) == 1);
    CHECK(class_element(ReducedResidue{13}, 44) == 805);

    CHECK(class_sum(ReducedResidue{17}, 6) == 497);
    CHECK(class_sum(ReducedResidue{5}, 0) == 5);
    CHECK(class_sum(ReducedResidue{13}, 2) == 93);

    CHECK(class_average(ReducedResidue{5}, 4) == 41);
    CHECK(class_average(ReducedResidue{5}, 5) == 50);
    CHECK(class_average(ReducedResidue{7}, 0) == 7);

    // Closed form against direct summation, and the average identity.
    for (int r : kReducedResidues) {
        ReducedResidue rr{r};
        u64 running = 0;
        for (u64 a = 0; a <= 300; ++a) {
            running += class_element(rr, a);
            REQUIRE(class_sum(rr, a) == running);
            REQUIRE(class_average(rr, a) * (a + 1) == running);
        }
    }
}

TEST_CASE("residue products stay reduced") {
    CHECK(residue_product(ReducedResidue{17}, ReducedResidue{5}).value() == 13);
    CHECK(residue_product(ReducedResidue{7}, ReducedResidue{13}).value() == 1);
    for (int r1 : kReducedResidues)
        for (int r2 : kReducedResidues) {
            int p = residue_product(ReducedResidue{r1}, ReducedResidue{r2}).value();
            CHECK(is_reduced_residue(p));
            if (r1 == 1)
                CHECK(p == r2);
        }
}

TEST_CASE("residue powers cycle with the known orders") {
    CHECK(residue_power(ReducedResidue{5}, 2).value() == 7);
    CHECK(residue_power(ReducedResidue{1}, 9).value() == 1);
    CHECK(residue_power(ReducedResidue{5}, 6).value() == 1);

    auto order = [](int g) {
        int acc = 1;
        for (u64 k = 1;; ++k) {
            acc = acc * g % 18;
            if (acc == 1)
                return k;
        }
    };
    CHECK(order(1) == 1);
    CHECK(order(17) == 2);
    CHECK(order(7) == 3);
    CHECK(order(13) == 3);
    CHECK(order(5) == 6);
    CHECK(order(11) == 6);

    // 5 and 11 generate every reduced residue over one period.
    for (int g : {5, 11}) {
        std::set<int> seen;
        for (u64 k = 1; k <= 6; ++k)
            seen.insert(residue_power(ReducedResidue{g}, k).value());
        CHECK(seen == std::set<int>{1, 5, 7, 11, 13, 17});
        for (u64 k = 1; k <= 24; ++k)
            CHECK(residue_power(ReducedResidue{g}, k) ==
                  residue_power(ReducedResidue{g}, k + 6));
    }
}

TEST_CASE("negative cores pair across 18") {
    CHECK(negative_core(ReducedResidue{5}) == -13);
    CHECK(negative_core(ReducedResidue{1}) == -17);
    CHECK(negative_core(ReducedResidue{7}) == -11);

    std::set<int> cores;
    for (int r : kReducedResidues) {
        int core = negative_core(ReducedResidue{r});
        CHECK(core + 18 == r);
        cores.insert(core);
    }
    CHECK(cores == std::set<int>{-17, -13, -11, -7, -5, -1});

    // (-r1)(-r2) == r1 r2 (mod 18)
    for (int r1 : kReducedResidues)
        for (int r2 : kReducedResidues) {
            int neg = negative_core(ReducedResidue{r1}) * negative_core(ReducedResidue{r2});
            CHECK(((neg % 18) + 18) % 18 ==
                  residue_product(ReducedResidue{r1}, ReducedResidue{r2}).value());
        }
}

TEST_CASE("reduced residue construction validates membership") {
    CHECK_THROWS_AS(ReducedResidue{3}, Error);
    CHECK_THROWS_AS(ReducedResidue{0}, Error);
    CHECK_THROWS_AS(ReducedResidue{18}, Error);
    CHECK(ReducedResidue{13}.value() == 13);
}
