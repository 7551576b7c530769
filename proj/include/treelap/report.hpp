#pragma once

#include <json.hpp>

#include "treelap/checks.hpp"
#include "treelap/domination.hpp"
#include "treelap/inertia.hpp"
#include "treelap/rational.hpp"
#include "treelap/tree.hpp"

namespace treelap {

// Exact value plus a truncated decimal companion so downstream consumers can
// choose precision or convenience: {"num": "...", "den": "...", "dec": "..."}.
// Strings on purpose; these outlive any fixed-width integer.
nlohmann::json rational_json(const Rational& q);

// Re-parses a rational_json object back into an exact value (used to verify
// serialization round-trips and by the CLI recheck path).
Rational rational_from_json(const nlohmann::json& j);

// Everything cmd-analyze prints for one tree: counting statistics, domination
// data with witnesses, exact ratios, and the invariant pass/fail list.
nlohmann::json analysis_json(const Tree& t);

nlohmann::json certificate_json(const DominationCertificate& cert, const Tree& t,
                                bool include_trace = false);

nlohmann::json intervals_json(const std::vector<SpectralInterval>& intervals);

nlohmann::json summary_json(const BatchSummary& summary);

}  // namespace treelap
