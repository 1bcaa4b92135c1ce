#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "euclid/types.hpp"

namespace euclid {

/// Finite simple continued fraction [q0, q1, ..., qn] of a rational >= 1,
/// in the convention where the last quotient exceeds 1 whenever n > 0.
/// That makes the expansion of every rational unique.
class ContinuedFraction {
 public:
  /// Throws ConventionViolation on an empty sequence, a zero quotient, or a
  /// trailing 1 with n >= 1.
  explicit ContinuedFraction(std::vector<Entry> quotients);

  std::span<const Entry> quotients() const noexcept { return quotients_; }
  Entry operator[](std::size_t i) const { return quotients_.at(i); }
  std::size_t degree() const noexcept { return quotients_.size() - 1; }

  /// Length of the maximal run q0 = q1 = ... at the front.
  std::size_t constant_prefix() const noexcept;
  bool all_equal() const noexcept { return constant_prefix() == quotients_.size(); }

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

 private:
  std::vector<Entry> quotients_;
};

/// "[2,2,2]"
std::string to_string(const ContinuedFraction& cf);

/// Expansion of max(a,b)/min(a,b) by the division algorithm. Throws
/// InvalidPosition on a zero input.
ContinuedFraction cf_expand(Entry a, Entry b);
inline ContinuedFraction cf_expand(const Position& p) { return cf_expand(p.a, p.b); }

/// Coprime (a,b) with a <= b and b/a equal to the fraction's value. Throws
/// std::overflow_error when the value does not fit in 64 bits.
Position cf_value(const ContinuedFraction& cf);

/// Largest i in [0,n] with q0 = ... = q_{i-1} <= q_i, computed from the
/// constant prefix r: i = r when q_r exists and exceeds q0, else r - 1.
std::size_t index_i(const ContinuedFraction& cf) noexcept;

/// Same quantity by scanning i = n, n-1, ... against the definition.
std::size_t index_i_direct(const ContinuedFraction& cf) noexcept;

/// min(index_i, n - 1). Throws TerminalPosition for degree 0 (the pair is
/// an M-Euclid terminal).
std::size_t index_j(const ContinuedFraction& cf);

/// Largest j < n satisfying the index_i condition, by direct scan.
std::size_t index_j_direct(const ContinuedFraction& cf);

}  // namespace euclid
