#include "doctest.h"

#include <random>
#include <set>

#include "elma/seeds.hpp"

using namespace elma;

namespace {

std::vector<std::pair<int, int>> printed_pairs(int r) {
    std::vector<std::pair<int, int>> out;
    for (const SeedPair& s : seeds_for(ReducedResidue{r}))
        out.emplace_back(s.r1.value(), s.r2.value());
    return out;
}

} // namespace

TEST_CASE("seed lists match the printed table, unit seed first") {
    using P = std::vector<std::pair<int, int>>;
    CHECK(printed_pairs(13) == P{{13, 1}, {7, 7}, {11, 11}, {17, 5}});
    CHECK(printed_pairs(17) == P{{17, 1}, {5, 7}, {11, 13}});
    CHECK(printed_pairs(1) == P{{1, 1}, {7, 13}, {11, 5}, {17, 17}});
    CHECK(printed_pairs(5) == P{{5, 1}, {11, 7}, {13, 17}});
    CHECK(printed_pairs(7) == P{{7, 1}, {5, 5}, {13, 13}, {11, 17}});
    CHECK(printed_pairs(11) == P{{11, 1}, {5, 13}, {7, 17}});
}

TEST_CASE("constraints follow the taxonomy") {
    const auto& class13 = seeds_for(ReducedResidue{13});
    CHECK(class13[0].constraint == SeedConstraint::unit_excluded);
    CHECK(class13[1].constraint == SeedConstraint::unordered);
    CHECK(class13[2].constraint == SeedConstraint::unordered);
    CHECK(class13[3].constraint == SeedConstraint::free_indices);

    const auto& class1 = seeds_for(ReducedResidue{1});
    CHECK(class1[0].constraint == SeedConstraint::unit_excluded_unordered);
    CHECK(class1[3].constraint == SeedConstraint::unordered);
}

TEST_CASE("every class holds exactly the closure pairs") {
    for (int r : kReducedResidues) {
        std::set<std::pair<int, int>> expected;
        for (int r1 : kReducedResidues)
            for (int r2 : kReducedResidues)
                if (r1 * r2 % 18 == r)
                    expected.insert({std::min(r1, r2), std::max(r1, r2)});
        std::set<std::pair<int, int>> actual;
        for (const SeedPair& s : seeds_for(ReducedResidue{r})) {
            CHECK(residue_product(s.r1, s.r2).value() == r);
            actual.insert({std::min(s.r1.value(), s.r2.value()),
                           std::max(s.r1.value(), s.r2.value())});
        }
        CHECK(actual == expected);
        std::size_t want = (r == 1 || r == 7 || r == 13) ? 4 : 3;
        CHECK(seeds_for(ReducedResidue{r}).size() == want);
    }
}

TEST_CASE("square seeds occur exactly in classes 1, 7, 13") {
    for (int r : kReducedResidues) {
        bool has_square = false;
        for (const SeedPair& s : seeds_for(ReducedResidue{r}))
            has_square = has_square || s.is_square();
        CHECK(has_square == (r == 1 || r == 7 || r == 13));
    }
}

TEST_CASE("polynomial coefficients as printed") {
    const SeedPair& s17x5 = seed_by_id(ReducedResidue{13}, "17x5");
    PolyCoeffs p = polynomial_coeffs(s17x5);
    CHECK(p.c0 == 85);
    CHECK(p.cb == 306);
    CHECK(p.ca == 90);
    CHECK(p.cab == 324);

    p = polynomial_coeffs(seed_by_id(ReducedResidue{13}, "7x7"));
    CHECK(p.c0 == 49);
    CHECK(p.cb == 126);
    CHECK(p.ca == 126);

    p = polynomial_coeffs(seed_by_id(ReducedResidue{1}, "1x1"));
    CHECK(p.c0 == 1);
    CHECK(p.cb == 18);
    CHECK(p.ca == 18);

    // Symmetric polynomials exactly for the squares.
    for (int r : kReducedResidues)
        for (const SeedPair& s : seeds_for(ReducedResidue{r}))
            CHECK((s.poly().ca == s.poly().cb) == s.is_square());
}

TEST_CASE("seed evaluation matches the binomials and keeps the class") {
    const SeedPair& s17x5 = seed_by_id(ReducedResidue{13}, "17x5");
    CHECK(evaluate_seed(s17x5, 1, 1) == 805);
    CHECK(evaluate_seed(s17x5, 0, 0) == 85);

    CHECK_THROWS_AS(evaluate_seed(seed_by_id(ReducedResidue{13}, "13x1"), 0, 0), Error);
    CHECK_THROWS_AS(evaluate_seed(seed_by_id(ReducedResidue{13}, "7x7"), 2, 1), Error);
    CHECK_THROWS_AS(evaluate_seed(seed_by_id(ReducedResidue{1}, "1x1"), 0, 1), Error);

    std::mt19937_64 rng{18};
    std::uniform_int_distribution<u64> dist(0, 400);
    for (int r : kReducedResidues) {
        for (const SeedPair& s : seeds_for(ReducedResidue{r})) {
            for (int trial = 0; trial < 200; ++trial) {
                u64 a = std::max(dist(rng), s.min_a());
                u64 b = std::max(dist(rng), s.min_b(a));
                u64 x = s.r1.value() + 18 * a;
                u64 y = s.r2.value() + 18 * b;
                u64 v = evaluate_seed(s, a, b);
                REQUIRE(v == x * y);
                REQUIRE(v % 18 == static_cast<u64>(r));
                REQUIRE(x > 1);
                REQUIRE(y > 1);
                PolyCoeffs p = s.poly();
                REQUIRE(v == p.c0 + p.cb * b + p.ca * a + p.cab * a * b);
            }
        }
    }
}

TEST_CASE("seed lookup by id validates the class") {
    CHECK(seed_by_id(ReducedResidue{13}, "17x5").id() == "17x5");
    CHECK_THROWS_AS(seed_by_id(ReducedResidue{17}, "17x5"), Error);
    CHECK(find_seed(ReducedResidue{13}, 5, 17) != nullptr);
    CHECK(find_seed(ReducedResidue{13}, 5, 7) == nullptr);
}
