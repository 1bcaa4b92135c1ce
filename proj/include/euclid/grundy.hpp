#pragma once

#include <optional>
#include <vector>

#include "euclid/continued_fraction.hpp"
#include "euclid/types.hpp"

namespace euclid {

/// Closed-form Sprague-Grundy value from the continued fraction of the
/// canonical pair (a <= b):
///
///   Euclid    floor(b/a) - [I odd]
///   Grossman  Euclid value, except when every quotient is equal, where it
///             becomes Euclid value - (-1)^I
///   M-Euclid  floor(b/a) - [J odd],  J = min(I, n - 1)
///
/// Terminal positions of the variant have value 0. Runs in O(log b).
GrundyReport grundy_formula(Variant variant, const Position& p);

inline GrundyValue grundy_value(Variant variant, const Position& p) {
  return grundy_formula(variant, p).value;
}

/// First legal move (canonical order) whose result has Grundy value 0, or
/// nullopt from a P-position. Throws TerminalPosition at a terminal.
std::optional<Move> winning_move(Variant variant, const Position& p);

/// Every legal move to a Grundy-0 option.
std::vector<Move> winning_moves(Variant variant, const Position& p);

/// First legal move whose result has Grundy value `target`, if any.
/// Throws TerminalPosition at a terminal.
std::optional<Move> move_to_value(Variant variant, const Position& p, GrundyValue target);

}  // namespace euclid
