#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace euclid {

using Entry = std::uint64_t;
using GrundyValue = std::uint64_t;

/// Terminal rule selector for the three subtraction games.
///
///  - Euclid: the game ends when an entry reaches zero.
///  - Grossman: the game ends when the two entries are equal.
///  - MEuclid: the game ends when one entry is a multiple of the other.
enum class Variant { Euclid, Grossman, MEuclid };

inline constexpr Variant kAllVariants[] = {Variant::Euclid, Variant::Grossman,
                                           Variant::MEuclid};

std::string_view to_string(Variant v);

/// Accepts "e"/"euclid", "g"/"grossman", "m"/"meuclid"/"m-euclid" (case-insensitive).
std::optional<Variant> parse_variant(std::string_view text);

/// Unordered pair of nonnegative integers. The stored order is whatever the
/// caller supplied; every value-level comparison goes through canonical().
struct Position {
  Entry a = 0;
  Entry b = 0;

  constexpr Position canonical() const noexcept {
    return a <= b ? Position{a, b} : Position{b, a};
  }
  constexpr Entry smaller() const noexcept { return a <= b ? a : b; }
  constexpr Entry larger() const noexcept { return a <= b ? b : a; }

  friend constexpr bool operator==(const Position&, const Position&) = default;
  friend constexpr auto operator<=>(const Position&, const Position&) = default;
};

/// Parses "a,b" with decimal entries (whitespace around the entries is allowed).
std::optional<Position> parse_position(std::string_view text);
std::string to_string(const Position& p);

enum class EntryRole { Larger, Smaller };

std::string_view to_string(EntryRole r);
std::optional<EntryRole> parse_entry_role(std::string_view text);

/// One subtraction: `multiplier` copies of the other entry are removed from
/// the `target` entry of the source's canonical form. `result` keeps the
/// source's canonical order (untouched entry first), e.g. (3,7) k=2 -> (3,1).
struct Move {
  EntryRole target = EntryRole::Larger;
  Entry multiplier = 0;
  Position result;

  friend bool operator==(const Move&, const Move&) = default;
};

std::string to_string(const Move& m);

enum class Method { ClosedForm, Oracle };

std::string_view to_string(Method m);

struct GrundyReport {
  GrundyValue value = 0;
  Method method = Method::ClosedForm;
  bool terminal = false;
  /// floor(larger / smaller); absent when the smaller entry is zero.
  std::optional<Entry> quotient;
  std::optional<std::size_t> index_i;
  /// Only defined for continued fractions of degree >= 1.
  std::optional<std::size_t> index_j;
};

// Errors ---------------------------------------------------------------------

class GameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPosition : public GameError {
 public:
  using GameError::GameError;
};

class IllegalMove : public GameError {
 public:
  using GameError::GameError;
};

class TerminalPosition : public GameError {
 public:
  using GameError::GameError;
};

class OracleBoundExceeded : public GameError {
 public:
  using GameError::GameError;
};

class ConventionViolation : public GameError {
 public:
  using GameError::GameError;
};

}  // namespace euclid
