#include "euclid/continued_fraction.hpp"

#include <algorithm>
#include <stdexcept>

namespace euclid {

ContinuedFraction::ContinuedFraction(std::vector<Entry> quotients) : quotients_(std::move(quotients)) {
  if (quotients_.empty()) throw ConventionViolation("continued fraction needs at least one quotient");
  if (std::ranges::find(quotients_, Entry{0}) != quotients_.end()) {
    throw ConventionViolation("continued fraction quotients must be positive");
  }
  if (quotients_.size() > 1 && quotients_.back() == 1) {
    throw ConventionViolation("last quotient must exceed 1 when the degree is positive: " +
                              to_string(*this));
  }
}

std::size_t ContinuedFraction::constant_prefix() const noexcept {
  const auto diff = std::ranges::find_if(quotients_, [&](Entry q) { return q != quotients_.front(); });
  return static_cast<std::size_t>(diff - quotients_.begin());
}

std::string to_string(const ContinuedFraction& cf) {
  std::string out = "[";
  for (std::size_t i = 0; i < cf.quotients().size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(cf.quotients()[i]);
  }
  out += ']';
  return out;
}

ContinuedFraction cf_expand(Entry a, Entry b) {
  if (a == 0 || b == 0) {
    throw InvalidPosition("continued fraction of " + to_string(Position{a, b}) +
                          " needs two positive entries");
  }
  Entry num = std::max(a, b);
  Entry den = std::min(a, b);
  std::vector<Entry> quotients;
  while (den != 0) {
    quotients.push_back(num / den);
    num = std::exchange(den, num % den);
  }
  return ContinuedFraction(std::move(quotients));
}

Position cf_value(const ContinuedFraction& cf) {
  // Evaluate from the tail: value = q + 1/(num/den)  =>  (q*num + den) / num.
  const auto q = cf.quotients();
  Entry num = q.back();
  Entry den = 1;
  for (auto it = q.rbegin() + 1; it != q.rend(); ++it) {
    Entry scaled = 0;
    Entry next = 0;
    if (__builtin_mul_overflow(*it, num, &scaled) || __builtin_add_overflow(scaled, den, &next)) {
      throw std::overflow_error("continued fraction value exceeds 64 bits: " + to_string(cf));
    }
    den = std::exchange(num, next);
  }
  return Position{den, num};
}

std::size_t index_i(const ContinuedFraction& cf) noexcept {
  const std::size_t r = cf.constant_prefix();
  if (r <= cf.degree() && cf[r] > cf[0]) return r;
  return r - 1;
}

namespace {

bool index_condition(const ContinuedFraction& cf, std::size_t i) {
  for (std::size_t t = 1; t < i; ++t) {
    if (cf[t] != cf[0]) return false;
  }
  return i == 0 || cf[0] <= cf[i];
}

}  // namespace

std::size_t index_i_direct(const ContinuedFraction& cf) noexcept {
  for (std::size_t i = cf.degree();; --i) {
    if (index_condition(cf, i)) return i;
  }
}

std::size_t index_j(const ContinuedFraction& cf) {
  if (cf.degree() == 0) {
    throw TerminalPosition("index J is undefined for degree-0 expansions " + to_string(cf));
  }
  return std::min(index_i(cf), cf.degree() - 1);
}

std::size_t index_j_direct(const ContinuedFraction& cf) {
  if (cf.degree() == 0) {
    throw TerminalPosition("index J is undefined for degree-0 expansions " + to_string(cf));
  }
  for (std::size_t j = cf.degree() - 1;; --j) {
    if (index_condition(cf, j)) return j;
  }
}

}  // namespace euclid
