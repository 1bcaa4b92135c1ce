#include "euclid/verify.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "euclid/grundy.hpp"
#include "euclid/rules.hpp"

namespace euclid {

namespace {

void require_sweep_bound(Entry max_entry, const GrundyOracle* oracle) {
  if (max_entry == 0) throw std::invalid_argument("max entry must be positive");
  if (oracle != nullptr && max_entry > oracle->bound()) {
    throw OracleBoundExceeded("sweep bound " + std::to_string(max_entry) + " exceeds the oracle bound " +
                              std::to_string(oracle->bound()));
  }
}

std::string context(Variant variant, const Position& p) {
  std::ostringstream out;
  out << to_string(variant) << " " << to_string(p);
  const Position c = p.canonical();
  if (c.a != 0) {
    const auto cf = cf_expand(c);
    out << " cf=" << to_string(cf) << " I=" << index_i(cf);
    if (cf.degree() >= 1) out << " J=" << index_j(cf);
  }
  return out.str();
}

// -(-1)^I applied to `base`.
GrundyValue shift_by_parity(GrundyValue base, std::size_t index) {
  return index % 2 == 0 ? base - 1 : base + 1;
}

ExceptionFlags flags_of(const ContinuedFraction& cf) {
  ExceptionFlags f;
  const std::size_t n = cf.degree();
  const bool prefix_through_penultimate = n >= 1 && cf.constant_prefix() >= n;
  f.euclid_vs_meuclid = prefix_through_penultimate && cf[0] <= cf[n];
  f.grossman_vs_meuclid = prefix_through_penultimate && cf[0] < cf[n];
  f.all_quotients_equal = cf.all_equal();
  return f;
}

std::vector<Violation> flag_mismatches(const Position& p, const ExceptionFlags& f, GrundyValue g_e,
                                       GrundyValue g_g, GrundyValue g_m) {
  std::vector<Violation> out;
  auto check = [&](bool flag, bool differs, const char* name) {
    if (flag != differs) {
      out.push_back({Variant::MEuclid, p, std::string("census flag ") + name,
                     std::string("flag=") + (flag ? "set" : "clear") + " but values " +
                         (differs ? "differ" : "agree") + " (g_e=" + std::to_string(g_e) +
                         " g_g=" + std::to_string(g_g) + " g_m=" + std::to_string(g_m) + ")"});
    }
  };
  check(f.euclid_vs_meuclid, g_m != g_e, "euclid_vs_meuclid");
  check(f.grossman_vs_meuclid, g_m != g_g, "grossman_vs_meuclid");
  check(f.all_quotients_equal, g_e != g_g, "all_quotients_equal");
  return out;
}

}  // namespace

std::string describe(const Discrepancy& d) {
  return context(d.variant, d.position) + ": formula=" + std::to_string(d.formula_value) +
         " oracle=" + std::to_string(d.oracle_value);
}

std::string describe(const Violation& v) {
  return context(v.variant, v.position) + ": " + v.check + ": " + v.detail;
}

std::vector<Discrepancy> verify_range(Variant variant, Entry max_entry, GrundyOracle& oracle) {
  require_sweep_bound(max_entry, &oracle);
  std::vector<Discrepancy> out;
  const Entry first = variant == Variant::Euclid ? 0 : 1;
  for (Entry a = first; a <= max_entry; ++a) {
    for (Entry b = first; b <= max_entry; ++b) {
      const Position p{a, b};
      if (!is_valid(variant, p)) continue;
      const GrundyValue formula = grundy_value(variant, p);
      const GrundyValue brute = oracle.value(variant, p);
      if (formula != brute) out.push_back({variant, p, formula, brute});
    }
  }
  return out;
}

std::vector<Violation> check_corollary(Entry max_entry, GrundyOracle& oracle) {
  require_sweep_bound(max_entry, &oracle);
  std::vector<Violation> out;
  for (Entry a = 1; a <= max_entry; ++a) {
    for (Entry b = a + 1; b <= max_entry; ++b) {
      if (b % a == 0) continue;
      const Position p{a, b};
      const auto cf = cf_expand(p);
      const std::size_t i = index_i(cf);
      const ExceptionFlags f = flags_of(cf);
      const GrundyValue g_e = oracle.value(Variant::Euclid, p);
      const GrundyValue g_g = oracle.value(Variant::Grossman, p);
      const GrundyValue g_m = oracle.value(Variant::MEuclid, p);

      const GrundyValue expect_from_e = f.euclid_vs_meuclid ? shift_by_parity(g_e, i) : g_e;
      if (g_m != expect_from_e) {
        out.push_back({Variant::MEuclid, p, "corollary G_M vs G_E",
                       "expected " + std::to_string(expect_from_e) + " from G_E=" + std::to_string(g_e) +
                           ", oracle G_M=" + std::to_string(g_m)});
      }
      const GrundyValue expect_from_g = f.grossman_vs_meuclid ? shift_by_parity(g_g, i) : g_g;
      if (g_m != expect_from_g) {
        out.push_back({Variant::MEuclid, p, "corollary G_M vs G_G",
                       "expected " + std::to_string(expect_from_g) + " from G_G=" + std::to_string(g_g) +
                           ", oracle G_M=" + std::to_string(g_m)});
      }
    }
  }
  return out;
}

std::vector<Violation> check_proof_properties(Variant variant, Entry max_entry, GrundyOracle& oracle) {
  require_sweep_bound(max_entry, &oracle);
  std::vector<Violation> out;
  std::vector<bool> reached;
  for (Entry a = 1; a <= max_entry; ++a) {
    for (Entry b = a; b <= max_entry; ++b) {
      const Position p{a, b};
      if (is_terminal(variant, p)) continue;
      const GrundyValue g = grundy_value(variant, p);
      if (const GrundyValue brute = oracle.value(variant, p); brute != g) {
        out.push_back({variant, p, "closed form vs oracle",
                       "formula=" + std::to_string(g) + " oracle=" + std::to_string(brute)});
      }

      reached.assign(static_cast<std::size_t>(g), false);
      for (const Move& m : legal_moves(variant, p)) {
        const GrundyValue h = grundy_value(variant, m.result);
        if (h == g) {
          out.push_back({variant, p, "property (1)",
                         "option " + to_string(m.result) + " shares value " + std::to_string(g)});
        } else if (h < g) {
          reached[static_cast<std::size_t>(h)] = true;
        }
      }
      for (std::size_t k = 0; k < reached.size(); ++k) {
        if (!reached[k]) {
          out.push_back({variant, p, "property (2)",
                         "no option has value " + std::to_string(k) + " < " + std::to_string(g)});
        }
      }
    }
  }
  return out;
}

std::vector<Violation> check_base_case(Entry max_a1) {
  std::vector<Violation> out;
  for (Entry a1 = 2; a1 <= max_a1; ++a1) {
    const Position p = cf_value(ContinuedFraction({1, a1}));
    const GrundyValue g = grundy_value(Variant::MEuclid, p);
    if (g != 1 || p != Position{a1, a1 + 1}) {
      out.push_back({Variant::MEuclid, p, "base case [1,a1]", "value " + std::to_string(g) + ", expected 1"});
    }
  }
  return out;
}

std::vector<Violation> check_index_identities(Entry max_entry) {
  std::vector<Violation> out;
  for (Entry a = 1; a <= max_entry; ++a) {
    for (Entry b = a; b <= max_entry; ++b) {
      const Position p{a, b};
      const auto cf = cf_expand(p);
      const std::size_t i = index_i(cf);
      if (i != index_i_direct(cf)) {
        out.push_back({Variant::Euclid, p, "index I",
                       "prefix formula " + std::to_string(i) + " vs definition " +
                           std::to_string(index_i_direct(cf))});
      }
      if (cf.degree() == 0) continue;
      const std::size_t j_min = std::min(i, cf.degree() - 1);
      if (index_j(cf) != j_min || index_j_direct(cf) != j_min) {
        out.push_back({Variant::MEuclid, p, "index J",
                       "definition " + std::to_string(index_j_direct(cf)) + " vs min(I,n-1)=" +
                           std::to_string(j_min)});
      }
    }
  }
  return out;
}

std::vector<Violation> check_cf_roundtrip(Entry max_entry) {
  std::vector<Violation> out;
  for (Entry a = 1; a <= max_entry; ++a) {
    for (Entry b = 1; b <= max_entry; ++b) {
      const Position p{a, b};
      const auto cf = cf_expand(p);
      const auto q = cf.quotients();
      if (cf.degree() >= 1 && q.back() < 2) {
        out.push_back({Variant::Euclid, p, "cf convention", "trailing quotient " + std::to_string(q.back())});
      }
      const Entry g = entry_gcd(p);
      const Position reduced = Position{a / g, b / g}.canonical();
      if (cf_value(cf) != reduced) {
        out.push_back({Variant::Euclid, p, "cf round trip",
                       "value " + to_string(cf_value(cf)) + " vs lowest terms " + to_string(reduced)});
      }
      if (cf_expand(cf_value(cf)) != cf) {
        out.push_back({Variant::Euclid, p, "cf round trip", "re-expansion differs from " + to_string(cf)});
      }
    }
  }
  return out;
}

GrundyTable grundy_table(Variant variant, Entry max_a, Entry max_b, Method method, GrundyOracle* oracle) {
  if (max_a == 0 || max_b == 0) throw std::invalid_argument("table dimensions must be positive");
  GrundyOracle local(std::max<Entry>(1, std::max(max_a, max_b)));
  if (method == Method::Oracle) {
    if (oracle == nullptr) {
      oracle = &local;
    } else if (std::max(max_a, max_b) > oracle->bound()) {
      throw OracleBoundExceeded("table exceeds the oracle bound " + std::to_string(oracle->bound()));
    }
  }

  GrundyTable table{variant, method, {}};
  table.cells.resize(static_cast<std::size_t>(max_a));
  for (Entry a = 1; a <= max_a; ++a) {
    auto& row = table.cells[static_cast<std::size_t>(a - 1)];
    row.reserve(static_cast<std::size_t>(max_b));
    for (Entry b = 1; b <= max_b; ++b) {
      const Position p{a, b};
      if (is_terminal(variant, p)) {
        row.emplace_back(std::nullopt);
      } else {
        row.emplace_back(method == Method::Oracle ? oracle->value(variant, p) : grundy_value(variant, p));
      }
    }
  }
  return table;
}

void write_csv(std::ostream& out, const GrundyTable& table) {
  const std::size_t cols = table.cells.empty() ? 0 : table.cells.front().size();
  out << "a\\b";
  for (std::size_t b = 1; b <= cols; ++b) out << ',' << b;
  out << '\n';
  for (std::size_t a = 0; a < table.cells.size(); ++a) {
    out << a + 1;
    for (const auto& cell : table.cells[a]) {
      out << ',';
      if (cell) {
        out << *cell;
      } else {
        out << 'T';
      }
    }
    out << '\n';
  }
}

ExceptionFlags CensusRow::flags() const { return flags_of(cf); }

std::vector<CensusRow> exception_census(Entry max_entry) {
  std::vector<CensusRow> rows;
  for (Entry a = 1; a <= max_entry; ++a) {
    for (Entry b = a + 1; b <= max_entry; ++b) {
      if (b % a == 0) continue;
      const Position p{a, b};
      const GrundyValue g_e = grundy_value(Variant::Euclid, p);
      const GrundyValue g_g = grundy_value(Variant::Grossman, p);
      const GrundyValue g_m = grundy_value(Variant::MEuclid, p);
      if (g_e == g_g && g_g == g_m) continue;
      rows.push_back(CensusRow{p, cf_expand(p), g_e, g_g, g_m});
    }
  }
  return rows;
}

std::vector<Violation> check_census_flags(const std::vector<CensusRow>& rows) {
  std::vector<Violation> out;
  for (const CensusRow& row : rows) {
    auto bad = flag_mismatches(row.position, row.flags(), row.g_e, row.g_g, row.g_m);
    out.insert(out.end(), bad.begin(), bad.end());
  }
  return out;
}

std::vector<Violation> check_census_biconditionals(Entry max_entry) {
  std::vector<Violation> out;
  for (Entry a = 1; a <= max_entry; ++a) {
    for (Entry b = a + 1; b <= max_entry; ++b) {
      if (b % a == 0) continue;
      const Position p{a, b};
      auto bad = flag_mismatches(p, flags_of(cf_expand(p)), grundy_value(Variant::Euclid, p),
                                 grundy_value(Variant::Grossman, p), grundy_value(Variant::MEuclid, p));
      out.insert(out.end(), bad.begin(), bad.end());
    }
  }
  return out;
}

void write_csv(std::ostream& out, const std::vector<CensusRow>& rows) {
  out << "a,b,cf,g_e,g_g,g_m,euclid_vs_meuclid,grossman_vs_meuclid,all_quotients_equal\n";
  for (const CensusRow& row : rows) {
    const ExceptionFlags f = row.flags();
    out << row.position.a << ',' << row.position.b << ",\"" << to_string(row.cf) << "\"," << row.g_e << ','
        << row.g_g << ',' << row.g_m << ',' << int{f.euclid_vs_meuclid} << ',' << int{f.grossman_vs_meuclid}
        << ',' << int{f.all_quotients_equal} << '\n';
  }
}

}  // namespace euclid
