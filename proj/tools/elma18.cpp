// elma18: congruence-class number theory engine working mod 18.
//
// Classifies integers into the six reduced residue classes, generates class
// composites with their factor pairs, answers primality and multiplicity
// queries by wheel trial division, and enumerates Goldbach, twin-prime,
// Sophie Germain, Mersenne and perfect-number structure.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "bench.hpp"
#include "elma/goldbach.hpp"
#include "elma/oracle.hpp"
#include "elma/sieve.hpp"
#include "elma/special.hpp"
#include "report.hpp"
#include "verify.hpp"

namespace {

using namespace elma;

struct GlobalFlags {
    bool json = false;
    bool quiet = false;
    bool timing = false;
};

void print_json(const Json& j) { std::cout << j.dump() << "\n"; }

u64 sieve_cap_from_env() {
    if (const char* env = std::getenv("ELMA_MAX_LIMIT"))
        return std::strtoull(env, nullptr, 10);
    return kDefaultSieveCap;
}

std::string pair_list(const std::vector<std::pair<u64, u64>>& pairs) {
    std::string out;
    for (auto [x, y] : pairs) {
        if (!out.empty())
            out += ", ";
        out += "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
    }
    return out;
}

void print_query(const GlobalFlags& flags, const MultiplicityReport& report, double ms) {
    if (flags.json) {
        print_json(query_report(report, flags.timing ? std::optional<double>(ms)
                                                     : std::nullopt));
        return;
    }
    std::cout << report.n << ": " << verdict_name(report.verdict);
    if (report.verdict == Verdict::excluded)
        std::cout << " (" << report.exclusion_reason << ")";
    std::cout << "\n";
    if (report.verdict == Verdict::prime)
        std::cout << "not found in any subset of class " << report.n % 18
                  << "; 0 = prime\n";
    for (const CompositeRecord& rec : report.events)
        std::cout << "found - subset " << rec.seed->id() << ", row " << rec.a + 1
                  << ", column " << rec.b + 1 << " (a=" << rec.a << ", b=" << rec.b
                  << "): " << rec.x << " * " << rec.y << "\n";
    if (report.verdict == Verdict::composite) {
        std::cout << "multiplicity " << report.multiplicity << ", divisors "
                  << *report.divisor_count << ", pairs " << pair_list(report.factor_pairs)
                  << "\n";
    }
    if (flags.timing)
        std::cout << "query took " << ms << " ms\n";
}

template <typename Fn> double timed_ms(Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

int run(int argc, char** argv) {
    CLI::App app{"elma18: reduced-residue (mod 18) classification, factor generation and "
                 "prime structure queries"};
    app.require_subcommand(1);
    GlobalFlags flags;
    app.add_flag("--json", flags.json, "machine output (stable field order)");
    app.add_flag("--quiet", flags.quiet, "suppress informational notes");
    app.add_flag("--timing", flags.timing, "attach wall-clock timing to reports");

    u64 arg_n = 0;
    int arg_class = 0;
    u64 arg_limit = 0;
    std::string arg_csv, arg_seed;
    u64 arg_rows = 8, arg_cols = 8;
    unsigned arg_workers = 1;
    u64 max_sieve = sieve_cap_from_env();
    u64 max_pairs = kDefaultGoldbachPairCap;

    auto* classify_cmd = app.add_subcommand("classify", "residue class of N");
    classify_cmd->add_option("N", arg_n, "integer >= 1")->required();

    auto* isprime_cmd = app.add_subcommand("is-prime", "primality by subset absence");
    isprime_cmd->add_option("N", arg_n)->required();

    auto* factor_cmd = app.add_subcommand("factor", "nontrivial factor pairs of N");
    factor_cmd->add_option("N", arg_n)->required();

    auto* mult_cmd = app.add_subcommand("multiplicity", "generation events for N");
    mult_cmd->add_option("N", arg_n)->required();

    auto* sieve_cmd = app.add_subcommand("sieve", "class composites up to a limit");
    sieve_cmd->add_option("--class", arg_class, "reduced residue")->required();
    sieve_cmd->add_option("--limit", arg_limit)->required();
    sieve_cmd->add_option("--csv", arg_csv, "write records as CSV to PATH");
    sieve_cmd->add_option("--workers", arg_workers, "construction threads");
    sieve_cmd->add_option("--max-limit", max_sieve, "override the sieve cap");

    auto* matrix_cmd = app.add_subcommand("matrix", "seed grid in the fixed CSV layout");
    matrix_cmd->add_option("--class", arg_class)->required();
    matrix_cmd->add_option("--seed", arg_seed, "seed id, e.g. 17x5")->required();
    matrix_cmd->add_option("--rows", arg_rows);
    matrix_cmd->add_option("--cols", arg_cols);
    matrix_cmd->add_option("--csv", arg_csv, "write to PATH instead of stdout");

    auto* census_cmd = app.add_subcommand("census", "element/prime/composite counts");
    census_cmd->add_option("--class", arg_class)->required();
    census_cmd->add_option("--limit", arg_limit)->required();
    census_cmd->add_option("--max-limit", max_sieve);

    bool gb_all = false, gb_first = false;
    auto* goldbach_cmd = app.add_subcommand("goldbach", "prime + prime decompositions of E");
    goldbach_cmd->add_option("E", arg_n, "even integer >= 6")->required();
    goldbach_cmd->add_flag("--all", gb_all, "every solution (default)");
    goldbach_cmd->add_flag("--first", gb_first, "stream until the first verified pair");
    goldbach_cmd->add_option("--max-pairs", max_pairs, "seesaw enumeration cap");

    auto* twins_cmd = app.add_subcommand("twins", "twin prime pairs by class-17 products");
    twins_cmd->add_option("--limit", arg_limit)->required();
    twins_cmd->add_option("--max-limit", max_sieve);

    u64 sophie_limit = 0;
    auto* sophie_cmd = app.add_subcommand("sophie", "Sophie Germain analysis");
    auto* sophie_n_opt = sophie_cmd->add_option("N", arg_n, "single candidate");
    sophie_cmd->add_option("--limit", sophie_limit, "scan primes up to the limit");

    u64 mersenne_exp = 0, mersenne_value = 0;
    auto* mersenne_cmd = app.add_subcommand("mersenne", "Mersenne residue classification");
    auto* exp_opt = mersenne_cmd->add_option("--exponent", mersenne_exp, "p for 2^p - 1");
    auto* val_opt = mersenne_cmd->add_option("--value", mersenne_value, "m = 2^p - 1");
    exp_opt->excludes(val_opt);

    u64 perfect_exp = 0;
    auto* perfect_cmd = app.add_subcommand("perfect", "perfect-number residue evidence");
    perfect_cmd->add_option("--exponent", perfect_exp)->required();

    auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
    u64 verify_limit = 1'000'000;
    verify_cmd->add_option("--limit", verify_limit, "oracle sweep bound");

    auto* bench_cmd = app.add_subcommand("bench", "query cost growth measurement");
    u64 bench_limit = 1'000'000'000'000ull;
    bench_cmd->add_option("--limit", bench_limit, "largest decade to time");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2; // usage error
    }

    if (classify_cmd->parsed()) {
        ResidueClassification c = classify(arg_n);
        if (flags.json)
            print_json(to_json(c));
        else
            std::cout << c.n << " = " << c.residue << " + 18*" << c.cycle << " ("
                      << kind_name(c.kind) << ", " << parity_name(c.parity)
                      << "; digit-sum route gives " << digit_sum_residue(c.n) << ")\n";
        return 0;
    }

    if (isprime_cmd->parsed()) {
        bool prime = false;
        double ms = timed_ms([&] { prime = is_prime(arg_n); });
        if (flags.json) {
            Json j{{"n", arg_n}, {"prime", prime}};
            j["timing"] = flags.timing ? Json(ms) : Json{};
            print_json(j);
        } else {
            std::cout << (prime ? "prime" : "not prime") << "\n";
            if (flags.timing)
                std::cout << "query took " << ms << " ms\n";
        }
        return 0;
    }

    if (factor_cmd->parsed()) {
        MultiplicityReport report;
        double ms = timed_ms([&] { report = multiplicity(arg_n); });
        if (flags.json) {
            print_query(flags, report, ms);
        } else if (report.verdict == Verdict::composite) {
            for (auto [x, y] : report.factor_pairs)
                std::cout << x << " " << y << "\n";
        } else {
            print_query(flags, report, ms);
        }
        return 0;
    }

    if (mult_cmd->parsed()) {
        MultiplicityReport report;
        double ms = timed_ms([&] { report = multiplicity(arg_n); });
        print_query(flags, report, ms);
        return 0;
    }

    if (sieve_cmd->parsed()) {
        SieveMatrix matrix = build_sieve(ReducedResidue{arg_class}, arg_limit, arg_workers,
                                         max_sieve);
        if (!arg_csv.empty()) {
            std::ofstream out(arg_csv);
            emit_sieve_csv(matrix, out);
            if (!flags.quiet && !flags.json)
                std::cout << matrix.records.size() << " records written to " << arg_csv
                          << "\n";
        }
        if (flags.json) {
            print_json(to_json(matrix));
        } else if (arg_csv.empty()) {
            for (u64 n : matrix.composite_values())
                std::cout << n << "\n";
        }
        return 0;
    }

    if (matrix_cmd->parsed()) {
        const SeedPair& seed = seed_by_id(ReducedResidue{arg_class}, arg_seed);
        if (!arg_csv.empty()) {
            std::ofstream out(arg_csv);
            emit_matrix_csv(seed, arg_rows, arg_cols, out);
        } else {
            emit_matrix_csv(seed, arg_rows, arg_cols, std::cout);
        }
        return 0;
    }

    if (census_cmd->parsed()) {
        ReducedResidue r{arg_class};
        ClassCensus c = census(r, arg_limit, 1, max_sieve);
        if (flags.json)
            print_json(to_json(c, r, arg_limit));
        else
            std::cout << "class " << arg_class << " up to " << arg_limit << ": "
                      << c.elements << " elements = " << c.primes << " primes + "
                      << c.composites << " composites"
                      << (arg_class == 1 ? " + the unit 1" : "")
                      << "; (x/ln x - 2)/6 estimates " << c.pnt_per_class_estimate << "\n";
        return 0;
    }

    if (goldbach_cmd->parsed()) {
        if (arg_n < 6 || arg_n % 2 != 0) {
            std::cerr << "goldbach: E must be an even integer >= 6\n";
            return 2;
        }
        if (gb_first) {
            std::optional<SeesawPair> first = goldbach_first(arg_n);
            if (flags.json)
                print_json(first ? to_json(*first) : Json{});
            else if (first)
                std::cout << arg_n << " = " << first->x << " + " << first->y << " (template "
                          << first->tmpl->r1.value() << "+" << first->tmpl->r2.value()
                          << ", a=" << first->a << ", b=" << first->b << ")\n";
            else
                std::cout << arg_n << ": no prime pair in the reduced system\n";
            return 0;
        }
        std::vector<std::pair<u64, u64>> solutions = goldbach_solutions(arg_n, max_pairs);
        if (flags.json) {
            Json pairs = Json::array();
            for (auto [x, y] : solutions)
                pairs.push_back(Json::array({x, y}));
            print_json(Json{{"E", arg_n}, {"solutions", pairs}});
        } else {
            for (auto [x, y] : solutions)
                std::cout << x << " + " << y << "\n";
            if (solutions.empty() && !flags.quiet)
                std::cout << arg_n
                          << ": no solution in the reduced system (partitions using 2 or 3 "
                             "fall outside it)\n";
        }
        return 0;
    }

    if (twins_cmd->parsed()) {
        std::vector<TwinProductRecord> records = twin_product_search(arg_limit, max_sieve);
        if (flags.json) {
            Json arr = Json::array();
            for (const TwinProductRecord& rec : records)
                arr.push_back(to_json(rec));
            print_json(arr);
        } else {
            for (const TwinProductRecord& rec : records) {
                std::cout << "(" << rec.p << ", " << rec.q << ") product " << rec.product;
                if (rec.outlier)
                    std::cout << " [outlier outside the reduced classes]";
                else
                    std::cout << " seed " << rec.seed->id() << " (a=" << rec.a
                              << ", b=" << rec.b << ")";
                std::cout << "\n";
            }
        }
        return 0;
    }

    if (sophie_cmd->parsed()) {
        if (sophie_n_opt->count() == 0 && sophie_limit == 0) {
            std::cerr << "sophie: pass N or --limit L\n";
            return 2;
        }
        if (sophie_limit > 0) {
            Json arr = Json::array();
            for (u64 p = 2; p <= sophie_limit; ++p) {
                SophieReport report = sophie_report(p);
                if (!report.is_sophie_germain)
                    continue;
                if (flags.json)
                    arr.push_back(to_json(report));
                else
                    std::cout << p << " (safe prime " << 2 * p + 1 << ")"
                              << (report.outlier ? " [outlier]" : "") << "\n";
            }
            if (flags.json)
                print_json(arr);
            return 0;
        }
        SophieReport report = sophie_report(arg_n);
        if (flags.json) {
            print_json(to_json(report));
        } else {
            std::cout << arg_n << ": "
                      << (report.is_sophie_germain ? "Sophie Germain"
                                                   : "not Sophie Germain");
            if (report.is_sophie_germain)
                std::cout << ", safe prime " << 2 * arg_n + 1;
            else if (!report.class_admissible)
                std::cout << " (class " << arg_n % 18 << " maps to "
                          << report.image.residue << " mod 18)";
            if (report.outlier)
                std::cout << " [outlier]";
            std::cout << "\n";
        }
        return 0;
    }

    if (mersenne_cmd->parsed()) {
        if (exp_opt->count() == 0 && val_opt->count() == 0) {
            std::cerr << "mersenne: pass --exponent P or --value M\n";
            return 2;
        }
        MersenneReport report = exp_opt->count() ? mersenne_classify(mersenne_exp)
                                                 : mersenne_source(mersenne_value);
        if (flags.json)
            print_json(to_json(report));
        else
            std::cout << "2^" << report.p << " - 1 = " << report.value << ": residue "
                      << report.predicted_residue << ", "
                      << mersenne_source_name(report.source_kind)
                      << (report.divisible_by_7 ? ", divisible by 7" : "") << "\n";
        return 0;
    }

    if (perfect_cmd->parsed()) {
        PerfectReport report = perfect_evaluate(perfect_exp);
        if (flags.json) {
            print_json(to_json(report));
        } else {
            std::cout << "2^" << report.p - 1 << " * (2^" << report.p
                      << " - 1) = " << u128_to_string(report.perfect) << ": residue "
                      << report.residue_mod_18 << ", " << perfect_type_name(report.type)
                      << (report.mersenne_prime ? "" : " (Mersenne factor composite)")
                      << "\n";
            std::cout << "N+1 residue " << report.plus_one_residue << ", divisible by 7: "
                      << (report.plus_one_divisible_by_7 ? "yes" : "no") << ", prime: ";
            if (report.plus_one_prime)
                std::cout << (*report.plus_one_prime ? "yes" : "no") << "\n";
            else
                std::cout << "unchecked (beyond the trial-division bound)\n";
        }
        return 0;
    }

    if (verify_cmd->parsed()) {
        bool passed = run_verification(options_for_limit(verify_limit), std::cout);
        return passed ? 0 : 1;
    }

    if (bench_cmd->parsed()) {
        run_bench(bench_limit, std::cout);
        return 0;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const elma::Error& e) {
        std::cerr << elma::errc_name(e.code()) << ": " << e.what() << "\n";
        return e.code() == elma::Errc::out_of_range ? 3 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
