#include "elma/oracle.hpp"

#include <algorithm>

namespace elma::oracle {

Factorization trial_factorize(std::uint64_t n) {
    Factorization f{n, {}};
    if (n < 2)
        return f;
    std::uint64_t rest = n;
    auto strip = [&](std::uint64_t d) {
        unsigned e = 0;
        while (rest % d == 0) {
            rest /= d;
            ++e;
        }
        if (e)
            f.prime_powers.emplace_back(d, e);
    };
    strip(2);
    for (std::uint64_t d = 3; d <= rest / d; d += 2)
        strip(d);
    if (rest > 1)
        f.prime_powers.emplace_back(rest, 1);
    return f;
}

std::uint64_t divisor_count(std::uint64_t n) {
    std::uint64_t tau = 1;
    for (auto [p, e] : trial_factorize(n).prime_powers)
        tau *= e + 1;
    return tau;
}

std::uint64_t oracle_multiplicity(std::uint64_t n) {
    std::uint64_t tau = divisor_count(n);
    return (tau - 2 + 1) / 2; // ceil((tau - 2) / 2); tau >= 2 for n >= 2
}

bool oracle_is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> factor_pairs(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    for (std::uint64_t x = 2; x <= n / x; ++x)
        if (n % x == 0)
            pairs.emplace_back(x, n / x);
    return pairs;
}

std::vector<bool> prime_table(std::uint64_t limit) {
    std::vector<bool> is_prime(limit + 1, true);
    is_prime[0] = false;
    if (limit >= 1)
        is_prime[1] = false;
    for (std::uint64_t i = 2; i * i <= limit; ++i)
        if (is_prime[i])
            for (std::uint64_t j = i * i; j <= limit; j += i)
                is_prime[j] = false;
    return is_prime;
}

} // namespace elma::oracle
