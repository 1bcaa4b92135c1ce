#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "euclid/continued_fraction.hpp"
#include "euclid/oracle.hpp"
#include "euclid/types.hpp"

namespace euclid {

/// Closed form and oracle disagree at `position`.
struct Discrepancy {
  Variant variant;
  Position position;
  GrundyValue formula_value;
  GrundyValue oracle_value;

  friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

/// A failed check, with enough context to reproduce it.
struct Violation {
  Variant variant;
  Position position;
  std::string check;
  std::string detail;
};

std::string describe(const Discrepancy& d);
std::string describe(const Violation& v);

/// Compares grundy_formula with the oracle on every ordered pair with both
/// entries <= max_entry that the variant admits (Euclid includes the zero
/// terminals). Throws OracleBoundExceeded above the oracle's bound and
/// std::invalid_argument for max_entry == 0.
std::vector<Discrepancy> verify_range(Variant variant, Entry max_entry, GrundyOracle& oracle);

/// For 0 < a < b <= max_entry with a not dividing b, checks the pointwise
/// relations between the oracle values of the three games:
///   G_M = G_E unless q0 = ... = q_{n-1} <= q_n, where G_M = G_E - (-1)^I
///   G_M = G_G unless q0 = ... = q_{n-1} <  q_n, where G_M = G_G - (-1)^I
std::vector<Violation> check_corollary(Entry max_entry, GrundyOracle& oracle);

/// On every nonterminal position of `variant` with entries <= max_entry,
/// using the closed form as the candidate Grundy function:
///   (1) no option has the same value;
///   (2) every smaller value is reached by some option;
/// and the candidate agrees with the oracle. For M-Euclid these are proven
/// properties; for Euclid and Grossman the result is empirical.
std::vector<Violation> check_proof_properties(Variant variant, Entry max_entry, GrundyOracle& oracle);

/// G_M([1, a1]) == 1 for 2 <= a1 <= max_a1, i.e. at positions (a1, a1 + 1).
std::vector<Violation> check_base_case(Entry max_a1);

/// index_j against its direct definition and index_i against the prefix
/// formula, for every pair with entries <= max_entry.
std::vector<Violation> check_index_identities(Entry max_entry);

/// Round trip through cf_expand / cf_value and the trailing-quotient
/// convention for every pair with entries <= max_entry.
std::vector<Violation> check_cf_roundtrip(Entry max_entry);

// Tables ---------------------------------------------------------------------

/// Rows a = 1..max_a, columns b = 1..max_b. nullopt marks a terminal cell.
struct GrundyTable {
  Variant variant;
  Method method;
  std::vector<std::vector<std::optional<GrundyValue>>> cells;

  std::optional<GrundyValue> at(Entry a, Entry b) const { return cells.at(a - 1).at(b - 1); }
};

GrundyTable grundy_table(Variant variant, Entry max_a, Entry max_b, Method method,
                         GrundyOracle* oracle = nullptr);

/// Header "a\b,1,2,...", one row per a; terminal cells are the literal T.
void write_csv(std::ostream& out, const GrundyTable& table);

// Census ---------------------------------------------------------------------

struct ExceptionFlags {
  /// q0 = ... = q_{n-1} <= q_n : G_M differs from G_E.
  bool euclid_vs_meuclid = false;
  /// q0 = ... = q_{n-1} <  q_n : G_M differs from G_G.
  bool grossman_vs_meuclid = false;
  /// q0 = ... = q_n : G_G differs from G_E.
  bool all_quotients_equal = false;
};

struct CensusRow {
  Position position;
  ContinuedFraction cf;
  GrundyValue g_e;
  GrundyValue g_g;
  GrundyValue g_m;

  /// Recomputed from cf on each call.
  ExceptionFlags flags() const;
};

/// Every 0 < a < b <= max_entry with a not dividing b where the three
/// closed-form values are not all equal, ordered by (a,b).
std::vector<CensusRow> exception_census(Entry max_entry);

/// Rows whose flags disagree with the differences they record.
std::vector<Violation> check_census_flags(const std::vector<CensusRow>& rows);

/// The flag/difference biconditionals on every pair 0 < a < b <= max_entry
/// with a not dividing b, including pairs that never make it into the census.
std::vector<Violation> check_census_biconditionals(Entry max_entry);

/// Header "a,b,cf,g_e,g_g,g_m,euclid_vs_meuclid,grossman_vs_meuclid,all_quotients_equal".
void write_csv(std::ostream& out, const std::vector<CensusRow>& rows);

}  // namespace euclid
