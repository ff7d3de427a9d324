#include "elma/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace elma {

namespace {

u64 isqrt_u64(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r)
        --r;
    while ((r + 1) <= n / (r + 1))
        ++r;
    return r;
}

bool is_perfect_square(u64 n) {
    u64 r = isqrt_u64(n);
    return r * r == n;
}

// Candidate factors coprime to 6: 5, 7, 11, 13, 17, 19, ... (+2/+4 wheel).
struct Wheel6 {
    u64 value = 5;
    int gap = 2;
    void advance() {
        value += gap;
        gap = 6 - gap;
    }
};

CompositeRecord make_record(u64 n, u64 x, u64 y) {
    // x <= y; orient the pair onto the seed of the unordered residue pair.
    int rx = static_cast<int>(x % 18);
    int ry = static_cast<int>(y % 18);
    const SeedPair* seed = find_seed(ReducedResidue{static_cast<int>(n % 18)}, rx, ry);
    if (seed->r1.value() == rx && (seed->r2.value() == ry || rx == ry))
        return {n, seed, (x - rx) / 18, (y - ry) / 18, x, y};
    return {n, seed, (y - ry) / 18, (x - rx) / 18, y, x};
}

bool record_less(const CompositeRecord& lhs, const CompositeRecord& rhs) {
    if (lhs.n != rhs.n)
        return lhs.n < rhs.n;
    int li = seed_index(lhs), ri = seed_index(rhs);
    if (li != ri)
        return li < ri;
    return lhs.a < rhs.a;
}

void enumerate_seed(const SeedPair& seed, u64 limit, unsigned workers, unsigned worker_id,
                    std::vector<CompositeRecord>& out) {
    for (u64 a = seed.min_a();; ++a) {
        u64 x = seed.r1.value() + 18 * a;
        u64 b0 = seed.min_b(a);
        u64 y0 = seed.r2.value() + 18 * b0;
        if (x > limit / y0)
            break; // larger a only raises the smallest product
        if (a % workers != worker_id)
            continue;
        for (u64 b = b0;; ++b) {
            u64 y = seed.r2.value() + 18 * b;
            if (y > limit / x)
                break;
            out.push_back({x * y, &seed, a, b, x, y});
        }
    }
}

} // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::prime: return "prime";
    case Verdict::composite: return "composite";
    case Verdict::unit: return "unit";
    case Verdict::excluded: return "excluded";
    }
    return "?";
}

int seed_index(const CompositeRecord& rec) {
    const auto& table = seeds_for(rec.seed->class_residue);
    return static_cast<int>(rec.seed - table.data());
}

std::vector<u64> SieveMatrix::composite_values() const {
    std::vector<u64> values;
    values.reserve(records.size());
    for (const CompositeRecord& rec : records)
        values.push_back(rec.n);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

SieveMatrix build_sieve(ReducedResidue r, u64 limit, unsigned workers, u64 cap) {
    if (limit < 1)
        raise(Errc::out_of_range, "build_sieve: limit must be >= 1");
    if (limit > cap)
        raise(Errc::out_of_range, "build_sieve: limit " + std::to_string(limit) +
                                      " exceeds cap " + std::to_string(cap));
    if (workers == 0)
        workers = 1;

    const auto& seeds = seeds_for(r);
    std::vector<std::vector<CompositeRecord>> parts(workers);
    if (workers == 1) {
        for (const SeedPair& seed : seeds)
            enumerate_seed(seed, limit, 1, 0, parts[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (const SeedPair& seed : seeds)
                    enumerate_seed(seed, limit, workers, w, parts[w]);
            });
        for (std::thread& t : pool)
            t.join();
    }

    SieveMatrix matrix{r, limit, {}};
    std::size_t total = 0;
    for (const auto& part : parts)
        total += part.size();
    matrix.records.reserve(total);
    for (auto& part : parts)
        matrix.records.insert(matrix.records.end(), part.begin(), part.end());
    std::sort(matrix.records.begin(), matrix.records.end(), record_less);
    return matrix;
}

MultiplicityReport multiplicity(u64 n) {
    MultiplicityReport report;
    report.n = n;
    if (n == 0) {
        report.verdict = Verdict::excluded;
        report.exclusion_reason = "0 is outside the system";
        return report;
    }
    if (n == 1) {
        report.verdict = Verdict::unit;
        return report;
    }
    if (n % 2 == 0 || n % 3 == 0) {
        report.verdict = Verdict::excluded;
        if (n == 2 || n == 3) {
            report.exclusion_reason = "outlier prime " + std::to_string(n) +
                                      "; not coprime to 18 (see is_prime)";
        } else {
            u64 d = n % 2 == 0 ? 2 : 3;
            report.trivial_factor = d;
            report.exclusion_reason =
                "divisible by " + std::to_string(d) + "; not coprime to 18";
        }
        return report;
    }

    // Wheel trial division: every nontrivial factor of n is coprime to 6.
    for (Wheel6 w; w.value <= n / w.value; w.advance()) {
        if (n % w.value == 0) {
            u64 x = w.value, y = n / w.value;
            report.factor_pairs.emplace_back(x, y);
            report.events.push_back(make_record(n, x, y));
        }
    }
    report.multiplicity = report.events.size();
    report.verdict = report.multiplicity == 0 ? Verdict::prime : Verdict::composite;
    report.divisor_count = 2 * report.multiplicity + 2 - (is_perfect_square(n) ? 1 : 0);
    return report;
}

u64 divisor_count(u64 n) {
    MultiplicityReport report = multiplicity(n);
    if (!report.divisor_count)
        raise(Errc::excluded, "divisor_count: " + std::to_string(n) +
                                  " is outside the reduced system");
    return *report.divisor_count;
}

bool is_prime(u64 n) {
    if (n < 2)
        return false;
    if (n == 2 || n == 3)
        return true; // the outliers; everything else here is wheel division
    if (n % 2 == 0 || n % 3 == 0)
        return false;
    for (Wheel6 w; w.value <= n / w.value; w.advance())
        if (n % w.value == 0)
            return false;
    return true;
}

std::vector<std::pair<u64, u64>> factor_pairs(u64 n) {
    MultiplicityReport report = multiplicity(n);
    if (report.verdict != Verdict::prime && report.verdict != Verdict::composite)
        raise(Errc::excluded, "factor_pairs: " + std::to_string(n) +
                                  " is outside the reduced system");
    return report.factor_pairs;
}

std::vector<u64> primes_in_class(ReducedResidue r, u64 limit, unsigned workers, u64 cap) {
    SieveMatrix matrix = build_sieve(r, limit, workers, cap);
    std::vector<u64> composites = matrix.composite_values();
    std::vector<u64> primes;
    std::size_t ci = 0;
    for (u64 n = r.value(); n <= limit; n += 18) {
        while (ci < composites.size() && composites[ci] < n)
            ++ci;
        bool composite = ci < composites.size() && composites[ci] == n;
        if (!composite && n != 1)
            primes.push_back(n);
    }
    return primes;
}

u64 gap_prime_count(u64 np1, u64 np2, ReducedResidue r) {
    if (np1 >= np2)
        raise(Errc::precondition, "gap_prime_count: need np1 < np2");
    if (np1 % 18 != static_cast<u64>(r.value()) || np2 % 18 != static_cast<u64>(r.value()))
        raise(Errc::precondition, "gap_prime_count: both endpoints must lie in class " +
                                      std::to_string(r.value()));
    std::vector<u64> composites = build_sieve(r, np2).composite_values();
    auto lo = std::lower_bound(composites.begin(), composites.end(), np1);
    if (lo == composites.end() || *lo != np1)
        raise(Errc::precondition, "gap_prime_count: " + std::to_string(np1) + " is not composite");
    auto hi = std::lower_bound(composites.begin(), composites.end(), np2);
    if (hi == composites.end() || *hi != np2)
        raise(Errc::precondition, "gap_prime_count: " + std::to_string(np2) + " is not composite");
    if (hi - lo != 1)
        raise(Errc::precondition, "gap_prime_count: a composite lies between " +
                                      std::to_string(np1) + " and " + std::to_string(np2));
    return (np2 - np1) / 18 - 1;
}

ClassCensus census(ReducedResidue r, u64 limit, unsigned workers, u64 cap) {
    SieveMatrix matrix = build_sieve(r, limit, workers, cap);
    u64 elements =
        limit >= static_cast<u64>(r.value()) ? (limit - r.value()) / 18 + 1 : 0;
    u64 composites = matrix.composite_values().size();
    u64 units = (r.value() == 1 && limit >= 1) ? 1 : 0; // 1 is neither prime nor composite
    double estimate = limit >= 2
                          ? (static_cast<double>(limit) / std::log(static_cast<double>(limit)) -
                             2.0) /
                                6.0
                          : std::nan("");
    return {elements, elements - composites - units, composites, estimate};
}

DeltaRowStream::DeltaRowStream(const SeedPair& seed, FixedSide fixed, u64 a, u64 b)
    : seed_(&seed), fixed_(fixed), a_(a), b_(b) {
    if (!seed.allows(a, b))
        raise(Errc::constraint, "delta row stream: start violates seed " + seed.id());
}

u64 DeltaRowStream::step() const {
    u64 fixed_factor = fixed_ == FixedSide::left ? seed_->r1.value() + 18 * a_
                                                 : seed_->r2.value() + 18 * b_;
    return 18 * fixed_factor;
}

u64 DeltaRowStream::next() {
    u64 value = evaluate_seed(*seed_, a_, b_);
    if (fixed_ == FixedSide::left)
        ++b_;
    else
        ++a_;
    return value;
}

DeltaDiagonalStream::DeltaDiagonalStream(const SeedPair& seed, DiagonalMode mode,
                                         u64 start_index)
    : seed_(&seed), mode_(mode), k_(start_index) {
    if (mode == DiagonalMode::unit_offset) {
        bool twin_unit = (seed.r1.value() == 17 && seed.r2.value() == 1) ||
                         (seed.r1.value() == 1 && seed.r2.value() == 17);
        if (!twin_unit)
            raise(Errc::constraint,
                  "unit-offset diagonal applies only to the {17,1} seed, not " + seed.id());
    }
    auto [a, b] = indices();
    if (!seed.allows(a, b))
        raise(Errc::constraint, "delta diagonal stream: start violates seed " + seed.id());
}

std::pair<u64, u64> DeltaDiagonalStream::indices() const {
    if (mode_ == DiagonalMode::equal_indices)
        return {k_, k_};
    // 17x1 orientation: the unit side runs one cycle ahead.
    return {k_, k_ + 1};
}

u64 DeltaDiagonalStream::next() {
    auto [a, b] = indices();
    u64 value = evaluate_seed(*seed_, a, b);
    ++k_;
    return value;
}

} // namespace elma
