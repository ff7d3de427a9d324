#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

#include "elma/goldbach.hpp"
#include "elma/sieve.hpp"
#include "elma/special.hpp"

namespace elma {

using Json = nlohmann::ordered_json;

// Machine-facing wire forms. Field names and field order are fixed; identical
// inputs serialize to identical bytes. Timing is attached only on request so
// the default output stays reproducible.

Json to_json(const ResidueClassification& c);
Json to_json(const CompositeRecord& rec);

/// The query report: n, residue, cycle, verdict, multiplicity, divisor_count,
/// factor_pairs, events, timing. Indices in events are zero-based (a, b).
Json query_report(const MultiplicityReport& report,
                  std::optional<double> timing_ms = std::nullopt);

Json to_json(const SieveMatrix& matrix);
Json to_json(const ClassCensus& census, ReducedResidue r, u64 limit);
Json to_json(const SophieReport& report);
Json to_json(const MersenneReport& report);
Json to_json(const PerfectReport& report);
Json to_json(const TwinProductRecord& rec);
Json to_json(const SeesawPair& pair);
Json to_json(const PairVerification& v);

/// Grid export in the fixed layout: row 0 is an empty corner cell followed by
/// the column factors r2 + 18b; each data row is the row factor r1 + 18a
/// followed by products. Cells the seed constraint forbids stay empty.
/// `rows` data rows starting at the seed's smallest a, `cols` columns starting
/// at the smallest b for that a-range.
void emit_matrix_csv(const SeedPair& seed, u64 rows, u64 cols, std::ostream& out);

/// Record dump: header n,seed,a,b,x,y then one row per generation event in
/// canonical order.
void emit_sieve_csv(const SieveMatrix& matrix, std::ostream& out);

} // namespace elma
