#include "euclid/types.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace euclid {

namespace {

std::string lowercase(std::string_view text) {
  std::string out(text);
  std::ranges::transform(out, out.begin(),
                         [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<Entry> parse_entry(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  Entry value = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || end != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::Euclid: return "euclid";
    case Variant::Grossman: return "grossman";
    case Variant::MEuclid: return "meuclid";
  }
  return "unknown";
}

std::optional<Variant> parse_variant(std::string_view text) {
  const std::string s = lowercase(trim(text));
  if (s == "e" || s == "euclid") return Variant::Euclid;
  if (s == "g" || s == "grossman") return Variant::Grossman;
  if (s == "m" || s == "meuclid" || s == "m-euclid") return Variant::MEuclid;
  return std::nullopt;
}

std::optional<Position> parse_position(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  auto a = parse_entry(text.substr(0, comma));
  auto b = parse_entry(text.substr(comma + 1));
  if (!a || !b) return std::nullopt;
  return Position{*a, *b};
}

std::string to_string(const Position& p) {
  return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
}

std::string_view to_string(EntryRole r) {
  return r == EntryRole::Larger ? "larger" : "smaller";
}

std::optional<EntryRole> parse_entry_role(std::string_view text) {
  const std::string s = lowercase(trim(text));
  if (s == "larger") return EntryRole::Larger;
  if (s == "smaller") return EntryRole::Smaller;
  return std::nullopt;
}

std::string to_string(const Move& m) {
  return "k=" + std::to_string(m.multiplier) + " on " + std::string(to_string(m.target)) +
         " -> " + to_string(m.result);
}

std::string_view to_string(Method m) {
  return m == Method::ClosedForm ? "closed_form" : "oracle";
}

}  // namespace euclid
