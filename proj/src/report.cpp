#include "report.hpp"

#include <cmath>
#include <ostream>

namespace elma {

Json to_json(const ResidueClassification& c) {
    return Json{{"n", c.n},
                {"parity", parity_name(c.parity)},
                {"residue", c.residue},
                {"kind", kind_name(c.kind)},
                {"cycle", c.cycle}};
}

Json to_json(const CompositeRecord& rec) {
    return Json{{"seed", rec.seed->id()}, {"a", rec.a}, {"b", rec.b}, {"x", rec.x},
                {"y", rec.y}};
}

Json query_report(const MultiplicityReport& report, std::optional<double> timing_ms) {
    Json j;
    j["n"] = report.n;
    if (report.n == 0) {
        j["residue"] = Json{};
        j["cycle"] = Json{};
    } else {
        ResidueClassification c = classify(report.n);
        j["residue"] = c.residue;
        j["cycle"] = c.cycle;
    }
    j["verdict"] = verdict_name(report.verdict);
    if (report.verdict == Verdict::excluded && !report.exclusion_reason.empty())
        j["reason"] = report.exclusion_reason;
    j["multiplicity"] = report.multiplicity;
    j["divisor_count"] = report.divisor_count ? Json(*report.divisor_count) : Json{};
    Json pairs = Json::array();
    for (auto [x, y] : report.factor_pairs)
        pairs.push_back(Json::array({x, y}));
    j["factor_pairs"] = std::move(pairs);
    Json events = Json::array();
    for (const CompositeRecord& rec : report.events)
        events.push_back(to_json(rec));
    j["events"] = std::move(events);
    j["timing"] = timing_ms ? Json(*timing_ms) : Json{};
    return j;
}

Json to_json(const SieveMatrix& matrix) {
    Json records = Json::array();
    for (const CompositeRecord& rec : matrix.records) {
        Json r;
        r["n"] = rec.n;
        r["seed"] = rec.seed->id();
        r["a"] = rec.a;
        r["b"] = rec.b;
        r["x"] = rec.x;
        r["y"] = rec.y;
        records.push_back(std::move(r));
    }
    return Json{{"class", matrix.class_residue.value()},
                {"limit", matrix.limit},
                {"composites", matrix.composite_values()},
                {"records", std::move(records)}};
}

Json to_json(const ClassCensus& census, ReducedResidue r, u64 limit) {
    return Json{{"class", r.value()},
                {"limit", limit},
                {"elements", census.elements},
                {"primes", census.primes},
                {"composites", census.composites},
                {"pnt_per_class_estimate", std::isnan(census.pnt_per_class_estimate)
                                               ? Json{}
                                               : Json(census.pnt_per_class_estimate)}};
}

Json to_json(const SophieReport& report) {
    return Json{{"p", report.p},
                {"class_admissible", report.class_admissible},
                {"image", to_json(report.image)},
                {"image_prime", report.image_prime},
                {"is_sophie_germain", report.is_sophie_germain},
                {"outlier", report.outlier}};
}

Json to_json(const MersenneReport& report) {
    return Json{{"p", report.p},
                {"value", report.value},
                {"predicted_residue", report.predicted_residue},
                {"source_kind", mersenne_source_name(report.source_kind)},
                {"divisible_by_7", report.divisible_by_7}};
}

Json to_json(const PerfectReport& report) {
    return Json{{"p", report.p},
                {"mersenne_prime", report.mersenne_prime},
                {"perfect", u128_to_string(report.perfect)},
                {"residue_mod_18", report.residue_mod_18},
                {"type", perfect_type_name(report.type)},
                {"outlier", report.outlier},
                {"plus_one_residue", report.plus_one_residue},
                {"plus_one_divisible_by_7", report.plus_one_divisible_by_7},
                {"plus_one_prime",
                 report.plus_one_prime ? Json(*report.plus_one_prime) : Json{}}};
}

Json to_json(const TwinProductRecord& rec) {
    return Json{{"p", rec.p},
                {"q", rec.q},
                {"product", rec.product},
                {"seed", rec.seed ? Json(rec.seed->id()) : Json{}},
                {"a", rec.a},
                {"b", rec.b},
                {"multiplicity", rec.multiplicity},
                {"outlier", rec.outlier}};
}

Json to_json(const SeesawPair& pair) {
    return Json{{"E", pair.e},
                {"template", Json::array({pair.tmpl->r1.value(), pair.tmpl->r2.value()})},
                {"a", pair.a},
                {"b", pair.b},
                {"x", pair.x},
                {"y", pair.y},
                {"x_prime", pair.x_prime},
                {"y_prime", pair.y_prime}};
}

Json to_json(const PairVerification& v) {
    return Json{{"x", v.x},
                {"y", v.y},
                {"n", v.n},
                {"multiplicity", v.multiplicity},
                {"event", v.event ? to_json(*v.event) : Json{}},
                {"pair_matched", v.pair_matched},
                {"cube_caveat", v.cube_caveat},
                {"both_prime", v.both_prime}};
}

void emit_matrix_csv(const SeedPair& seed, u64 rows, u64 cols, std::ostream& out) {
    u64 a0 = seed.min_a();
    u64 b0 = seed.min_b(a0);
    for (u64 j = 0; j < cols; ++j)
        out << ',' << seed.r2.value() + 18 * (b0 + j);
    out << '\n';
    for (u64 i = 0; i < rows; ++i) {
        u64 a = a0 + i;
        out << seed.r1.value() + 18 * a;
        for (u64 j = 0; j < cols; ++j) {
            u64 b = b0 + j;
            out << ',';
            if (seed.allows(a, b))
                out << evaluate_seed(seed, a, b);
        }
        out << '\n';
    }
}

void emit_sieve_csv(const SieveMatrix& matrix, std::ostream& out) {
    out << "n,seed,a,b,x,y\n";
    for (const CompositeRecord& rec : matrix.records)
        out << rec.n << ',' << rec.seed->id() << ',' << rec.a << ',' << rec.b << ',' << rec.x
            << ',' << rec.y << '\n';
}

} // namespace elma
