#include "euclid/grundy.hpp"

#include <algorithm>

#include "euclid/rules.hpp"

namespace euclid {

GrundyReport grundy_formula(Variant variant, const Position& p) {
  validate(variant, p);
  GrundyReport report;
  report.method = Method::ClosedForm;
  report.terminal = is_terminal(variant, p);

  const Position c = p.canonical();
  if (c.a == 0) return report;  // Euclid terminal; nothing else is defined.

  const Entry quotient = c.b / c.a;
  const ContinuedFraction cf = cf_expand(c);
  const std::size_t i = index_i(cf);
  report.quotient = quotient;
  report.index_i = i;
  if (cf.degree() >= 1) report.index_j = index_j(cf);

  if (report.terminal) return report;

  const GrundyValue euclid_value = quotient - (i % 2 == 0 ? 0 : 1);
  switch (variant) {
    case Variant::Euclid:
      report.value = euclid_value;
      break;
    case Variant::Grossman:
      // -(-1)^I: subtract one for even I, add one for odd I.
      report.value = !cf.all_equal() ? euclid_value
                     : i % 2 == 0    ? euclid_value - 1
                                     : euclid_value + 1;
      break;
    case Variant::MEuclid:
      report.value = quotient - (*report.index_j % 2 == 0 ? 0 : 1);
      break;
  }
  return report;
}

namespace {

void require_nonterminal(Variant variant, const Position& p) {
  if (is_terminal(variant, p)) {
    throw TerminalPosition("position " + to_string(p) + " is terminal under " +
                           std::string(to_string(variant)));
  }
}

// From canonical (a,b) with q = floor(b/a), the option with multiplier k < q
// expands as [q-k, a1, ..., an]; every closed form above gives it the value
// q-k or q-k-1. Only k = q-t-1 and k = q-t can therefore hit value t, plus
// the k = q option whose expansion drops the leading quotient. Returned in
// ascending order so the first hit is the canonical tie-break.
std::vector<Entry> candidate_multipliers(Variant variant, const Position& p, GrundyValue target) {
  const Position c = p.canonical();
  const Entry q = c.b / c.a;
  const Entry max_k = move_count(variant, p);
  std::vector<Entry> ks;
  auto add = [&](Entry k) {
    if (k >= 1 && k <= max_k && std::ranges::find(ks, k) == ks.end()) ks.push_back(k);
  };
  if (target < q) {
    add(q - target);
    if (target + 1 < q) add(q - target - 1);
  }
  add(q);
  std::ranges::sort(ks);
  return ks;
}

}  // namespace

std::optional<Move> move_to_value(Variant variant, const Position& p, GrundyValue target) {
  require_nonterminal(variant, p);
  for (Entry k : candidate_multipliers(variant, p, target)) {
    auto m = find_move(variant, p, EntryRole::Larger, k);
    if (m && grundy_value(variant, m->result) == target) return m;
  }
  return std::nullopt;
}

std::optional<Move> winning_move(Variant variant, const Position& p) {
  return move_to_value(variant, p, 0);
}

std::vector<Move> winning_moves(Variant variant, const Position& p) {
  require_nonterminal(variant, p);
  std::vector<Move> out;
  for (Entry k : candidate_multipliers(variant, p, 0)) {
    auto m = find_move(variant, p, EntryRole::Larger, k);
    if (m && grundy_value(variant, m->result) == 0) out.push_back(*m);
  }
  return out;
}

}  // namespace euclid
