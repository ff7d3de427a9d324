#include "elma/goldbach.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace elma {

namespace {

GoldbachTemplate make_template(int lepi, int r1, int r2) {
    ReducedResidue a{r1}, b{r2};
    ReducedResidue product = residue_product(a, b);
    return {lepi,      a, b, r1 == 1 ? u64{1} : u64{0}, r1 == r2, product,
            find_seed(product, r1, r2)};
}

std::map<int, std::vector<GoldbachTemplate>> build_templates() {
    // Unordered reduced pairs summing to each even residue, in table order.
    std::map<int, std::vector<GoldbachTemplate>> t;
    t[0] = {make_template(0, 1, 17), make_template(0, 7, 11), make_template(0, 5, 13)};
    t[2] = {make_template(2, 1, 1), make_template(2, 7, 13)};
    t[4] = {make_template(4, 5, 17), make_template(4, 11, 11)};
    t[6] = {make_template(6, 1, 5), make_template(6, 7, 17), make_template(6, 11, 13)};
    t[8] = {make_template(8, 1, 7), make_template(8, 13, 13)};
    t[10] = {make_template(10, 5, 5), make_template(10, 11, 17)};
    t[12] = {make_template(12, 1, 11), make_template(12, 5, 7), make_template(12, 13, 17)};
    t[14] = {make_template(14, 1, 13), make_template(14, 7, 7)};
    t[16] = {make_template(16, 5, 11), make_template(16, 17, 17)};
    return t;
}

// Budget S with a + b == S, or nullopt when the template does not reach e.
std::optional<u64> seesaw_budget(u64 e, const GoldbachTemplate& t) {
    u64 base = static_cast<u64>(t.r1.value()) + t.r2.value();
    if (e < base || (e - base) % 18 != 0)
        return std::nullopt;
    return (e - base) / 18;
}

SeesawPair make_pair(u64 e, const GoldbachTemplate& t, u64 a, u64 budget) {
    u64 b = budget - a;
    u64 x = t.r1.value() + 18 * a;
    u64 y = t.r2.value() + 18 * b;
    return {e, &t, a, b, x, y, is_prime(x), is_prime(y)};
}

} // namespace

const std::vector<GoldbachTemplate>& templates_for(int lepi) {
    static const std::map<int, std::vector<GoldbachTemplate>> tables = build_templates();
    auto it = tables.find(lepi);
    if (it == tables.end())
        raise(Errc::not_even_residue,
              "templates_for: " + std::to_string(lepi) + " is not an even residue mod 18");
    return it->second;
}

std::vector<SeesawPair> seesaw(u64 e, const GoldbachTemplate& t) {
    std::optional<u64> budget = seesaw_budget(e, t);
    if (!budget)
        raise(Errc::template_inapplicable,
              "seesaw: template " + std::to_string(t.r1.value()) + "+" +
                  std::to_string(t.r2.value()) + " does not reach " + std::to_string(e));
    std::vector<SeesawPair> pairs;
    for (u64 a = t.a_min; a <= *budget; ++a) {
        u64 b = *budget - a;
        if (t.unordered && a > b)
            break;
        pairs.push_back(make_pair(e, t, a, *budget));
    }
    return pairs;
}

std::vector<std::pair<u64, u64>> goldbach_solutions(u64 e, u64 pair_cap) {
    if (e < 6 || e % 2 != 0)
        raise(Errc::precondition, "goldbach_solutions: need an even integer >= 6");
    const auto& templates = templates_for(static_cast<int>(e % 18));

    u64 total_pairs = 0;
    for (const GoldbachTemplate& t : templates)
        if (auto budget = seesaw_budget(e, t); budget && *budget >= t.a_min)
            total_pairs += *budget - t.a_min + 1;
    if (total_pairs > pair_cap)
        raise(Errc::out_of_range, "goldbach_solutions: " + std::to_string(total_pairs) +
                                      " seesaw pairs exceed the cap of " +
                                      std::to_string(pair_cap) +
                                      " (use the streaming first-solution mode)");

    std::vector<std::pair<u64, u64>> solutions;
    for (const GoldbachTemplate& t : templates) {
        if (!seesaw_budget(e, t))
            continue;
        for (const SeesawPair& p : seesaw(e, t))
            if (p.x_prime && p.y_prime)
                solutions.emplace_back(std::min(p.x, p.y), std::max(p.x, p.y));
    }
    std::sort(solutions.begin(), solutions.end());
    solutions.erase(std::unique(solutions.begin(), solutions.end()), solutions.end());
    return solutions;
}

std::optional<SeesawPair> goldbach_first(u64 e) {
    if (e < 6 || e % 2 != 0)
        raise(Errc::precondition, "goldbach_first: need an even integer >= 6");
    const auto& templates = templates_for(static_cast<int>(e % 18));

    std::vector<std::pair<const GoldbachTemplate*, u64>> live;
    u64 max_budget = 0;
    for (const GoldbachTemplate& t : templates)
        if (auto budget = seesaw_budget(e, t)) {
            live.emplace_back(&t, *budget);
            max_budget = std::max(max_budget, *budget);
        }
    // Walk all templates with ascending a so small primes are tried first.
    for (u64 a = 0; a <= max_budget; ++a) {
        for (auto [t, budget] : live) {
            if (a < t->a_min || a > budget)
                continue;
            u64 b = budget - a;
            if (t->unordered && a > b)
                continue;
            SeesawPair p = make_pair(e, *t, a, budget);
            if (p.x_prime && p.y_prime)
                return p;
        }
    }
    return std::nullopt;
}

PairVerification verify_pair(u64 x, u64 y) {
    if (x <= 1 || y <= 1 || x % 2 == 0 || x % 3 == 0 || y % 2 == 0 || y % 3 == 0)
        raise(Errc::excluded, "verify_pair: both members must be reduced-odd and > 1");
    u64 lo = std::min(x, y), hi = std::max(x, y);
    if (hi > ~u64{0} / lo)
        raise(Errc::out_of_range, "verify_pair: product overflows 64 bits");

    PairVerification v{};
    v.x = x;
    v.y = y;
    v.n = x * y;
    MultiplicityReport report = multiplicity(v.n);
    v.multiplicity = report.multiplicity;
    for (const CompositeRecord& rec : report.events) {
        if (std::min(rec.x, rec.y) == lo && std::max(rec.x, rec.y) == hi) {
            v.event = rec;
            v.pair_matched = true;
            break;
        }
    }
    v.cube_caveat = lo * lo == hi; // n == lo^3 slips through as multiplicity 1
    v.both_prime = v.multiplicity == 1 && v.pair_matched && !v.cube_caveat;
    return v;
}

} // namespace elma
