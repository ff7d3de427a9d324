#include "doctest.h"

#include "elma/oracle.hpp"

using namespace elma::oracle;
using u64 = std::uint64_t;

TEST_CASE("trial factorization on the worked values") {
    auto f = trial_factorize(6313);
    CHECK(f.prime_powers == decltype(f.prime_powers){{59, 1}, {107, 1}});

    CHECK(trial_factorize(1).prime_powers.empty());

    f = trial_factorize(715);
    CHECK(f.prime_powers == decltype(f.prime_powers){{5, 1}, {11, 1}, {13, 1}});
}

TEST_CASE("re-multiplying prime powers reproduces n") {
    for (u64 n = 1; n <= 10'000'000; ++n) {
        u64 product = 1;
        for (auto [p, e] : trial_factorize(n).prime_powers)
            for (unsigned i = 0; i < e; ++i)
                product *= p;
        REQUIRE(product == n);
    }
}

TEST_CASE("multiplicity from the divisor count") {
    CHECK(oracle_multiplicity(175) == 2);
    CHECK(oracle_multiplicity(49) == 1);
    CHECK(oracle_multiplicity(3465) == 11);
    CHECK(divisor_count(3465) == 24);
    CHECK(oracle_multiplicity(13) == 0);
}

TEST_CASE("primality by trial division") {
    CHECK(oracle_is_prime(13477));
    CHECK_FALSE(oracle_is_prime(1));
    CHECK_FALSE(oracle_is_prime(8129)); // 11 * 739
    CHECK(oracle_is_prime(2));
    CHECK_FALSE(oracle_is_prime(0));

    auto table = prime_table(10'000);
    for (u64 n = 0; n <= 10'000; ++n)
        REQUIRE(oracle_is_prime(n) == table[n]);
}

TEST_CASE("factor pairs ascend and multiply back") {
    auto pairs = factor_pairs(175);
    CHECK(pairs == decltype(pairs){{5, 35}, {7, 25}});
    CHECK(factor_pairs(13).empty());
    for (u64 n = 2; n <= 2'000; ++n) {
        auto ps = factor_pairs(n);
        CHECK(ps.size() == oracle_multiplicity(n));
        for (auto [x, y] : ps) {
            CHECK(x * y == n);
            CHECK(x <= y);
            CHECK(x > 1);
        }
    }
}
