#include "euclid/wire.hpp"

#include "euclid/grundy.hpp"
#include "euclid/oracle.hpp"
#include "euclid/rules.hpp"

namespace euclid {

namespace {

template <typename T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json to_json(const Position& p) { return {{"a", p.a}, {"b", p.b}}; }

nlohmann::json to_json(const Move& m) {
  return {{"target_entry", to_string(m.target)}, {"multiplier", m.multiplier}, {"result", to_json(m.result)}};
}

nlohmann::json to_json(const GrundyReport& r) {
  return {{"value", r.value},
          {"method", to_string(r.method)},
          {"terminal", r.terminal},
          {"quotient", optional_json(r.quotient)},
          {"index_i", optional_json(r.index_i)},
          {"index_j", optional_json(r.index_j)}};
}

nlohmann::json to_json(const ContinuedFraction& cf) {
  return nlohmann::json(std::vector<Entry>(cf.quotients().begin(), cf.quotients().end()));
}

nlohmann::json analysis_json(Variant variant, const Position& p, std::optional<Entry> oracle_bound) {
  const GrundyReport report = grundy_formula(variant, p);
  nlohmann::json out = to_json(report);
  out["variant"] = to_string(variant);
  out["position"] = to_json(p);
  const Position c = p.canonical();
  out["cf"] = c.a != 0 ? to_json(cf_expand(c)) : nlohmann::json(nullptr);
  out["legal_move_count"] = move_count(variant, p);

  nlohmann::json winners = nlohmann::json::array();
  if (!report.terminal) {
    for (const Move& m : winning_moves(variant, p)) winners.push_back(to_json(m));
  }
  out["winning_move"] = winners.empty() ? nlohmann::json(nullptr) : winners.front();
  out["winning_moves"] = std::move(winners);

  if (oracle_bound) {
    if (c.b <= *oracle_bound) {
      GrundyOracle oracle(*oracle_bound);
      out["oracle_value"] = oracle.value(variant, p);
    } else {
      out["oracle_value"] = nullptr;
    }
  }
  return out;
}

}  // namespace euclid
