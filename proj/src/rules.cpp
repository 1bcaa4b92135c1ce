#include "euclid/rules.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace euclid {

void validate(Variant variant, const Position& p) {
  if (p.a == 0 && p.b == 0) {
    throw InvalidPosition("position " + to_string(p) + " has no positive entry");
  }
  if (variant != Variant::Euclid && (p.a == 0 || p.b == 0)) {
    throw InvalidPosition("position " + to_string(p) + " has a zero entry, which is only valid under " +
                          "euclid");
  }
}

bool is_valid(Variant variant, const Position& p) noexcept {
  if (p.a == 0 && p.b == 0) return false;
  return variant == Variant::Euclid || (p.a != 0 && p.b != 0);
}

bool is_terminal(Variant variant, const Position& p) {
  validate(variant, p);
  const Position c = p.canonical();
  switch (variant) {
    case Variant::Euclid: return c.a == 0;
    case Variant::Grossman: return c.a == c.b;
    case Variant::MEuclid: return c.b % c.a == 0;
  }
  return false;
}

Entry move_count(Variant variant, const Position& p) {
  if (is_terminal(variant, p)) return 0;
  const Position c = p.canonical();
  // The smaller entry can never absorb a multiple of the larger one, and
  // for equal entries reducing either gives the same option.
  const Entry floor_entry = variant == Variant::Euclid ? 0 : 1;
  return (c.b - floor_entry) / c.a;
}

std::optional<Move> find_move(Variant variant, const Position& p, EntryRole target, Entry multiplier) {
  if (target != EntryRole::Larger || multiplier == 0) return std::nullopt;
  if (multiplier > move_count(variant, p)) return std::nullopt;
  const Position c = p.canonical();
  return Move{EntryRole::Larger, multiplier, Position{c.a, c.b - multiplier * c.a}};
}

std::vector<Move> legal_moves(Variant variant, const Position& p) {
  std::vector<Move> moves;
  const Entry max_k = move_count(variant, p);
  if (max_k == 0) return moves;
  const Position c = p.canonical();
  moves.reserve(static_cast<std::size_t>(max_k));
  for (Entry k = 1; k <= max_k; ++k) {
    moves.push_back(Move{EntryRole::Larger, k, Position{c.a, c.b - k * c.a}});
  }
  return moves;
}

Position apply_move(Variant variant, const Position& p, const Move& m) {
  const auto legal = find_move(variant, p, m.target, m.multiplier);
  if (!legal || *legal != m) {
    throw IllegalMove("move " + to_string(m) + " is not legal from " + to_string(p) + " under " +
                      std::string(to_string(variant)));
  }
  return m.result.canonical();
}

GrundyValue mex(std::span<const GrundyValue> values) {
  // Only values below values.size() can matter.
  std::vector<bool> seen(values.size() + 1, false);
  for (GrundyValue v : values) {
    if (v < seen.size()) seen[static_cast<std::size_t>(v)] = true;
  }
  return static_cast<GrundyValue>(std::ranges::find(seen, false) - seen.begin());
}

Entry entry_gcd(const Position& p) noexcept { return std::gcd(p.a, p.b); }

}  // namespace euclid
