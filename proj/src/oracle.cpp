#include "euclid/oracle.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>
#include <vector>

#include "euclid/rules.hpp"

namespace euclid {

namespace {

// Keys pack both entries into one 64-bit word.
constexpr Entry kMaxBound = 0xFFFF'FFFFu;

}  // namespace

GrundyOracle::GrundyOracle(Entry bound) : bound_(bound) {
  if (bound_ == 0 || bound_ > kMaxBound) {
    throw std::invalid_argument("oracle bound must be in [1, 2^32-1]");
  }
}

GrundyValue GrundyOracle::value(Variant variant, const Position& p) {
  validate(variant, p);
  const Position root = p.canonical();
  if (root.b > bound_) {
    throw OracleBoundExceeded("position " + to_string(p) + " exceeds the oracle bound " +
                              std::to_string(bound_) + "; use the closed form");
  }

  Memo& table = memo(variant);
  if (auto it = table.find(key(root)); it != table.end()) return it->second;

  std::vector<Position> work{root};
  std::vector<GrundyValue> option_values;
  while (!work.empty()) {
    const Position top = work.back();
    if (table.contains(key(top))) {
      work.pop_back();
      continue;
    }
    if (is_terminal(variant, top)) {
      table.emplace(key(top), 0);
      work.pop_back();
      continue;
    }

    bool ready = true;
    option_values.clear();
    for (const Move& m : legal_moves(variant, top)) {
      const Position q = m.result.canonical();
      if (auto it = table.find(key(q)); it != table.end()) {
        option_values.push_back(it->second);
      } else {
        work.push_back(q);
        ready = false;
      }
    }
    if (ready) {
      table.emplace(key(top), mex(option_values));
      work.pop_back();
    }
  }
  return table.at(key(root));
}

GrundyReport GrundyOracle::report(Variant variant, const Position& p) {
  GrundyReport r;
  r.value = value(variant, p);
  r.method = Method::Oracle;
  r.terminal = is_terminal(variant, p);
  const Position c = p.canonical();
  if (c.a != 0) r.quotient = c.b / c.a;
  return r;
}

std::size_t GrundyOracle::memo_size(Variant variant) const noexcept {
  return memos_[static_cast<std::size_t>(variant)].size();
}

void GrundyOracle::clear() noexcept {
  for (auto& m : memos_) m.clear();
}

Entry oracle_bound_from_env() {
  const char* raw = std::getenv("EUCLID_ORACLE_BOUND");
  if (raw == nullptr) return kDefaultOracleBound;
  const std::string_view s(raw);
  Entry value = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || end != s.data() + s.size() || value == 0 || value > kMaxBound) {
    throw std::invalid_argument("EUCLID_ORACLE_BOUND must be a positive integer below 2^32");
  }
  return value;
}

}  // namespace euclid
