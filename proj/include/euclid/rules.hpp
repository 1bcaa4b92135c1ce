#pragma once

#include <span>
#include <vector>

#include "euclid/types.hpp"

namespace euclid {

/// Throws InvalidPosition when both entries are zero, or when a zero entry
/// appears under Grossman or M-Euclid.
void validate(Variant variant, const Position& p);

bool is_valid(Variant variant, const Position& p) noexcept;

/// Euclid: an entry is zero. Grossman: a == b. M-Euclid: the smaller entry
/// divides the larger (equal entries included).
bool is_terminal(Variant variant, const Position& p);

/// Moves of the canonical form of p, larger entry first, multipliers
/// ascending. Euclid allows a zero result; the other variants require the
/// reduced entry to stay positive.
std::vector<Move> legal_moves(Variant variant, const Position& p);

/// Number of legal moves, without materializing them.
Entry move_count(Variant variant, const Position& p);

/// The legal move reducing `target` by `multiplier` copies of the other
/// entry, or nullopt when that subtraction is not allowed.
std::optional<Move> find_move(Variant variant, const Position& p, EntryRole target, Entry multiplier);

/// Returns m.result in canonical form. Throws IllegalMove unless m is one of
/// legal_moves(variant, p).
Position apply_move(Variant variant, const Position& p, const Move& m);

/// Least nonnegative integer not in `values`.
GrundyValue mex(std::span<const GrundyValue> values);

/// gcd of the nonzero entries (0 when both are zero).
Entry entry_gcd(const Position& p) noexcept;

}  // namespace euclid
