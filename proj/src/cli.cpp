#include "euclid/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>

#include "euclid/grundy.hpp"
#include "euclid/http_api.hpp"
#include "euclid/oracle.hpp"
#include "euclid/rules.hpp"
#include "euclid/verify.hpp"
#include "euclid/wire.hpp"

namespace euclid::cli {

namespace {

enum class Format { Text, Csv, Structured };

struct Config {
  std::string variant = "m";
  std::string pos;
  std::string format = "text";
  std::string method = "closed_form";
  Entry max_entry = 0;
  Entry max_a = 10;
  Entry max_b = 10;
  Entry oracle_bound = 0;  // 0: environment or default
  bool use_oracle = false;
  bool properties = false;
  bool any = false;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string static_dir;
  std::size_t capacity = 1024;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Variant require_variant(const std::string& text) {
  auto v = parse_variant(text);
  if (!v) throw UsageError("unknown variant '" + text + "' (expected e, g or m)");
  return *v;
}

// Input positions are strictly positive; zero entries only ever appear as
// Euclid results.
Position require_position(const std::string& text) {
  auto p = parse_position(text);
  if (!p) throw UsageError("position must be written a,b (got '" + text + "')");
  if (p->a == 0 || p->b == 0) throw UsageError("position entries must be positive");
  return *p;
}

Format require_format(const std::string& text, bool csv_allowed) {
  if (text == "text") return Format::Text;
  if (text == "structured") return Format::Structured;
  if (text == "csv" && csv_allowed) return Format::Csv;
  throw UsageError("unsupported output format '" + text + "'");
}

Entry oracle_bound(const Config& cfg) { return cfg.oracle_bound != 0 ? cfg.oracle_bound : oracle_bound_from_env(); }

std::string optional_text(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "-"; }

int cmd_analyze(const Config& cfg, std::ostream& out) {
  const Variant variant = require_variant(cfg.variant);
  const Position p = require_position(cfg.pos);
  const Format format = require_format(cfg.format, false);

  std::optional<GrundyValue> oracle_value;
  if (cfg.use_oracle) {
    GrundyOracle oracle(oracle_bound(cfg));
    oracle_value = oracle.value(variant, p);
  }

  const GrundyReport report = grundy_formula(variant, p);
  if (format == Format::Structured) {
    nlohmann::json record = analysis_json(variant, p);
    if (oracle_value) {
      record["oracle_value"] = *oracle_value;
      record["agree"] = *oracle_value == report.value;
    }
    out << record.dump() << '\n';
    return kOk;
  }

  const auto cf = cf_expand(p);
  out << "variant: " << to_string(variant) << '\n'
      << "position: " << to_string(p) << '\n'
      << "terminal: " << (report.terminal ? "yes" : "no") << '\n'
      << "cf: " << to_string(cf) << '\n'
      << "quotient: " << *report.quotient << '\n'
      << "I: " << optional_text(report.index_i) << '\n'
      << "J: " << optional_text(report.index_j) << '\n'
      << "grundy: " << report.value << " (" << to_string(report.method) << ")\n";
  if (oracle_value) {
    out << "oracle: " << *oracle_value << (*oracle_value == report.value ? " (agrees)" : " (DISAGREES)") << '\n';
  }
  if (!report.terminal) {
    const auto m = winning_move(variant, p);
    out << "winning move: " << (m ? to_string(*m) : std::string("none")) << '\n';
  }
  return kOk;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  if (cfg.max_entry == 0) throw UsageError("--max must be a positive integer");
  const Format format = require_format(cfg.format, false);
  std::vector<Variant> variants;
  const bool all = cfg.variant == "all";
  if (all) {
    variants.assign(std::begin(kAllVariants), std::end(kAllVariants));
  } else {
    variants.push_back(require_variant(cfg.variant));
  }

  GrundyOracle oracle(oracle_bound(cfg));
  if (cfg.max_entry > oracle.bound()) {
    throw OracleBoundExceeded("--max " + std::to_string(cfg.max_entry) + " exceeds the oracle bound " +
                              std::to_string(oracle.bound()));
  }

  std::size_t failures = 0;
  auto report = [&](const std::string& check, const std::vector<std::string>& problems) {
    failures += problems.size();
    if (format == Format::Structured) {
      out << nlohmann::json{{"check", check}, {"max_entry", cfg.max_entry}, {"violations", problems}}.dump()
          << '\n';
      return;
    }
    out << check << " (max " << cfg.max_entry << "): " << (problems.empty() ? "ok" : "FAILED") << '\n';
    for (const auto& p : problems) out << "  " << p << '\n';
  };
  auto describe_all = [](const auto& items) {
    std::vector<std::string> lines;
    for (const auto& item : items) lines.push_back(describe(item));
    return lines;
  };

  for (Variant v : variants) {
    report(std::string("formula vs oracle [") + std::string(to_string(v)) + "]",
           describe_all(verify_range(v, cfg.max_entry, oracle)));
  }
  if (all) {
    report("corollary relations", describe_all(check_corollary(cfg.max_entry, oracle)));
    report("census flags", describe_all(check_census_biconditionals(cfg.max_entry)));
  }
  if (cfg.properties) {
    for (Variant v : variants) {
      report(std::string("proof properties [") + std::string(to_string(v)) + "]",
             describe_all(check_proof_properties(v, cfg.max_entry, oracle)));
    }
  }
  if (format == Format::Text) out << (failures == 0 ? "all checks passed" : "verification FAILED") << '\n';
  return failures == 0 ? kOk : kVerificationFailed;
}

int cmd_table(const Config& cfg, std::ostream& out) {
  const Variant variant = require_variant(cfg.variant);
  const Format format = require_format(cfg.format, true);
  if (cfg.max_a == 0 || cfg.max_b == 0) throw UsageError("--max-a and --max-b must be positive");
  Method method = Method::ClosedForm;
  if (cfg.method == "oracle") {
    method = Method::Oracle;
  } else if (cfg.method != "closed_form") {
    throw UsageError("--method must be closed_form or oracle");
  }

  std::optional<GrundyOracle> oracle;
  if (method == Method::Oracle) oracle.emplace(oracle_bound(cfg));
  const GrundyTable table = grundy_table(variant, cfg.max_a, cfg.max_b, method, oracle ? &*oracle : nullptr);

  switch (format) {
    case Format::Csv:
      write_csv(out, table);
      break;
    case Format::Structured:
      for (std::size_t a = 0; a < table.cells.size(); ++a) {
        nlohmann::json cells = nlohmann::json::array();
        for (const auto& c : table.cells[a]) cells.push_back(c ? nlohmann::json(*c) : nlohmann::json("T"));
        out << nlohmann::json{{"variant", to_string(variant)}, {"method", to_string(method)}, {"a", a + 1},
                              {"values", std::move(cells)}}
                   .dump()
            << '\n';
      }
      break;
    case Format::Text: {
      std::size_t width = std::max<std::size_t>(3, std::to_string(std::max(cfg.max_a, cfg.max_b)).size());
      for (const auto& row : table.cells) {
        for (const auto& c : row) {
          if (c) width = std::max(width, std::to_string(*c).size());
        }
      }
      out << std::setw(static_cast<int>(width)) << "a\\b";
      for (Entry b = 1; b <= cfg.max_b; ++b) out << ' ' << std::setw(static_cast<int>(width)) << b;
      out << '\n';
      for (std::size_t a = 0; a < table.cells.size(); ++a) {
        out << std::setw(static_cast<int>(width)) << a + 1;
        for (const auto& c : table.cells[a]) {
          out << ' ' << std::setw(static_cast<int>(width)) << (c ? std::to_string(*c) : std::string("T"));
        }
        out << '\n';
      }
      break;
    }
  }
  return kOk;
}

int cmd_census(const Config& cfg, std::ostream& out) {
  if (cfg.max_entry == 0) throw UsageError("--max must be a positive integer");
  const Format format = require_format(cfg.format, true);  // text falls through to csv
  const auto rows = exception_census(cfg.max_entry);
  if (format == Format::Structured) {
    for (const CensusRow& row : rows) {
      const ExceptionFlags f = row.flags();
      out << nlohmann::json{{"position", to_json(row.position)},
                            {"cf", to_json(row.cf)},
                            {"g_e", row.g_e},
                            {"g_g", row.g_g},
                            {"g_m", row.g_m},
                            {"exception_flags",
                             {{"euclid_vs_meuclid", f.euclid_vs_meuclid},
                              {"grossman_vs_meuclid", f.grossman_vs_meuclid},
                              {"all_quotients_equal", f.all_quotients_equal}}}}
                 .dump()
          << '\n';
    }
  } else {
    write_csv(out, rows);
  }
  return check_census_flags(rows).empty() ? kOk : kVerificationFailed;
}

int cmd_cf(const Config& cfg, std::ostream& out) {
  const Position p = require_position(cfg.pos);
  const auto cf = cf_expand(p);
  out << to_string(cf) << "  I=" << index_i(cf);
  if (cf.degree() >= 1) out << " J=" << index_j(cf);
  out << '\n';
  return kOk;
}

int cmd_hint(const Config& cfg, std::ostream& out) {
  const Variant variant = require_variant(cfg.variant);
  const Position p = require_position(cfg.pos);
  if (auto m = winning_move(variant, p)) {
    out << "move k=" << m->multiplier << " -> " << to_string(m->result) << '\n';
  } else if (cfg.any) {
    const auto first = find_move(variant, p, EntryRole::Larger, 1);
    out << "no winning move; first legal move k=" << first->multiplier << " -> " << to_string(first->result)
        << '\n';
  } else {
    out << "no winning move\n";
  }
  return kOk;
}

int cmd_serve(const Config& cfg, std::ostream& out, std::ostream& err) {
  SessionStore::Options options;
  options.capacity = cfg.capacity;
  const std::optional<std::string> static_dir =
      cfg.static_dir.empty() ? std::nullopt : std::optional<std::string>(cfg.static_dir);
  out << "serving on http://" << cfg.host << ':' << cfg.port << std::endl;
  if (!serve(cfg.host, cfg.port, static_dir, options)) {
    err << "error: could not start the server on " << cfg.host << ':' << cfg.port
        << (static_dir ? " (or static directory " + *static_dir + " is missing)" : std::string()) << '\n';
    return kRuntimeError;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Sprague-Grundy analysis for Euclid, Grossman's game and M-Euclid", "euclid"};
  app.require_subcommand(1);
  app.add_option("--oracle-bound", cfg.oracle_bound,
                 "Largest entry the brute-force oracle accepts (default: $EUCLID_ORACLE_BOUND or 10000)");

  auto* analyze = app.add_subcommand("analyze", "Grundy value, expansion and winning move of a position");
  analyze->add_option("--variant", cfg.variant, "e, g or m")->required();
  analyze->add_option("--pos", cfg.pos, "position a,b")->required();
  analyze->add_flag("--oracle", cfg.use_oracle, "also run the brute-force oracle");
  analyze->add_option("--format", cfg.format, "text or structured");

  auto* verify = app.add_subcommand("verify", "compare the closed forms with the oracle");
  verify->add_option("--variant", cfg.variant, "e, g, m or all")->required();
  verify->add_option("--max", cfg.max_entry, "largest entry swept")->required();
  verify->add_flag("--properties", cfg.properties, "also check the mex properties of the closed form");
  verify->add_option("--format", cfg.format, "text or structured");

  auto* table = app.add_subcommand("table", "Grundy value table");
  table->add_option("--variant", cfg.variant, "e, g or m")->required();
  table->add_option("--max-a", cfg.max_a, "rows");
  table->add_option("--max-b", cfg.max_b, "columns");
  table->add_option("--method", cfg.method, "closed_form or oracle");
  table->add_option("--format", cfg.format, "text, csv or structured");

  auto* census = app.add_subcommand("census", "positions where the three games disagree");
  census->add_option("--max", cfg.max_entry, "largest entry")->required();
  census->add_option("--format", cfg.format, "csv (default) or structured");

  auto* cf = app.add_subcommand("cf", "continued fraction and indices I, J");
  cf->add_option("pos", cfg.pos, "position a,b")->required();

  auto* hint = app.add_subcommand("hint", "winning move from a position");
  hint->add_option("--variant", cfg.variant, "e, g or m")->required();
  hint->add_option("--pos", cfg.pos, "position a,b")->required();
  hint->add_flag("--any", cfg.any, "print the first legal move when no winning move exists");

  auto* serve_cmd = app.add_subcommand("serve", "host the play API");
  serve_cmd->add_option("--host", cfg.host, "bind address");
  serve_cmd->add_option("--port", cfg.port, "port");
  serve_cmd->add_option("--static", cfg.static_dir, "directory of web UI assets");
  serve_cmd->add_option("--capacity", cfg.capacity, "maximum live sessions");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*analyze) return cmd_analyze(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*table) return cmd_table(cfg, out);
    if (*census) return cmd_census(cfg, out);
    if (*cf) return cmd_cf(cfg, out);
    if (*hint) return cmd_hint(cfg, out);
    if (*serve_cmd) return cmd_serve(cfg, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return kUsageError;
}

}  // namespace euclid::cli
