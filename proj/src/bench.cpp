#include "bench.hpp"

#include <chrono>
#include <cmath>
#include <ostream>

#include "elma/sieve.hpp"

namespace elma {

namespace {

using Clock = std::chrono::steady_clock;

// Largest primes below 10^6 .. 10^12; primes force the full sqrt(n) scan.
constexpr u64 kLadder[] = {999'983ull,         9'999'991ull,         99'999'989ull,
                           999'999'937ull,     9'999'999'967ull,     99'999'999'977ull,
                           999'999'999'989ull};

double time_one_query(u64 n) {
    // Size the batch so each measurement spans at least ~2 ms.
    auto once = [&] {
        auto t0 = Clock::now();
        volatile bool sink = is_prime(n);
        (void)sink;
        return std::chrono::duration<double, std::micro>(Clock::now() - t0).count();
    };
    double estimate = once();
    unsigned batch = estimate >= 2000.0
                         ? 1
                         : static_cast<unsigned>(2000.0 / (estimate > 0.05 ? estimate : 0.05)) + 1;
    double best = 0.0;
    for (int round = 0; round < 3; ++round) {
        auto t0 = Clock::now();
        for (unsigned i = 0; i < batch; ++i) {
            volatile bool sink = is_prime(n);
            (void)sink;
        }
        double per =
            std::chrono::duration<double, std::micro>(Clock::now() - t0).count() / batch;
        if (round == 0 || per < best)
            best = per;
    }
    return best;
}

} // namespace

BenchResult run_bench(u64 max_n, std::ostream& out) {
    BenchResult result{{}, 0.0};
    for (u64 n : kLadder) {
        if (n > max_n)
            break;
        double micros = time_one_query(n);
        result.samples.push_back({n, micros});
        out << "bench n=" << n << " query=" << micros << "us\n";
    }
    if (result.samples.size() < 2) {
        out << "bench: need at least two decades to fit an exponent\n";
        return result;
    }
    // Least-squares slope of log(cost) against log(n).
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const BenchSample& s : result.samples) {
        double lx = std::log(static_cast<double>(s.n));
        double ly = std::log(s.micros);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double count = static_cast<double>(result.samples.size());
    result.fitted_exponent = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    out << "bench fitted exponent " << result.fitted_exponent
        << " (cost ~ n^e; trial division predicts 0.5, not polynomial in bits)\n";
    return result;
}

} // namespace elma
