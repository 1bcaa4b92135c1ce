#pragma once

#include <json.hpp>

#include "euclid/continued_fraction.hpp"
#include "euclid/types.hpp"

namespace euclid {

// Structured records shared by the HTTP service and the CLI's structured
// output. Field names follow the C++ member names.

nlohmann::json to_json(const Position& p);
nlohmann::json to_json(const Move& m);
nlohmann::json to_json(const GrundyReport& r);
nlohmann::json to_json(const ContinuedFraction& cf);

/// Closed-form analysis of one position: the report, the expansion (when
/// both entries are positive), legal-move count and winning moves. With
/// `oracle_bound` set, includes "oracle_value" (null above the bound).
nlohmann::json analysis_json(Variant variant, const Position& p, std::optional<Entry> oracle_bound = {});

}  // namespace euclid
