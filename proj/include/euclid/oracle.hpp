#pragma once

#include <array>
#include <cstddef>
#include <unordered_map>

#include "euclid/types.hpp"

namespace euclid {

inline constexpr Entry kDefaultOracleBound = 10'000;

/// Brute-force Sprague-Grundy evaluator: value 0 at terminals, otherwise the
/// mex over all options. Results are memoized per variant on canonical
/// positions and the tree walk uses an explicit worklist, so the call stack
/// stays flat even along long subtraction chains such as (1,b).
///
/// An instance is not synchronized; give each thread its own.
class GrundyOracle {
 public:
  explicit GrundyOracle(Entry bound = kDefaultOracleBound);

  Entry bound() const noexcept { return bound_; }

  /// Throws OracleBoundExceeded when max(a,b) exceeds the bound, and
  /// InvalidPosition for positions the variant does not admit.
  GrundyValue value(Variant variant, const Position& p);

  /// Same value wrapped in a report (method = oracle, indices absent).
  GrundyReport report(Variant variant, const Position& p);

  std::size_t memo_size(Variant variant) const noexcept;
  void clear() noexcept;

 private:
  using Memo = std::unordered_map<std::uint64_t, GrundyValue>;

  static std::uint64_t key(const Position& canonical) noexcept {
    return (canonical.a << 32) | canonical.b;
  }
  Memo& memo(Variant variant) noexcept { return memos_[static_cast<std::size_t>(variant)]; }

  Entry bound_;
  std::array<Memo, 3> memos_;
};

/// Bound from the EUCLID_ORACLE_BOUND environment variable, or the default.
Entry oracle_bound_from_env();

}  // namespace euclid
