#include "euclid/continued_fraction.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

namespace euclid {
namespace {

using Q = std::vector<Entry>;

TEST(CfExpand, Examples) {
  EXPECT_EQ(cf_expand(3, 7), ContinuedFraction(Q{2, 3}));
  EXPECT_EQ(cf_expand(1, 5), ContinuedFraction(Q{5}));
  EXPECT_EQ(cf_expand(5, 12), ContinuedFraction(Q{2, 2, 2}));
  EXPECT_EQ(cf_expand(12, 5), ContinuedFraction(Q{2, 2, 2}));
  EXPECT_EQ(cf_expand(4, 4), ContinuedFraction(Q{1}));
  EXPECT_EQ(to_string(cf_expand(5, 12)), "[2,2,2]");
}

TEST(CfExpand, RejectsZero) {
  EXPECT_THROW(cf_expand(0, 5), InvalidPosition);
  EXPECT_THROW(cf_expand(5, 0), InvalidPosition);
}

TEST(CfExpand, ConsecutiveFibonacciGiveLongestExpansion) {
  Entry f0 = 1, f1 = 2;
  while (f1 <= std::numeric_limits<Entry>::max() - f0) f0 = std::exchange(f1, f0 + f1);
  const auto cf = cf_expand(f0, f1);
  EXPECT_EQ(cf.quotients().back(), 2u);
  for (std::size_t i = 0; i + 1 < cf.quotients().size(); ++i) EXPECT_EQ(cf[i], 1u);
  EXPECT_LE(cf.degree(), 92u);
  EXPECT_EQ(cf_value(cf), (Position{f0, f1}));
}

TEST(ContinuedFractionType, EnforcesConvention) {
  EXPECT_THROW(ContinuedFraction(Q{}), ConventionViolation);
  EXPECT_THROW(ContinuedFraction(Q{2, 0, 3}), ConventionViolation);
  EXPECT_THROW(ContinuedFraction(Q{2, 1}), ConventionViolation);
  EXPECT_NO_THROW(ContinuedFraction(Q{1}));
  EXPECT_NO_THROW(ContinuedFraction(Q{1, 1, 2}));
}

TEST(CfValue, Examples) {
  EXPECT_EQ(cf_value(ContinuedFraction(Q{2, 3})), (Position{3, 7}));
  EXPECT_EQ(cf_value(ContinuedFraction(Q{1, 1, 2})), (Position{3, 5}));
  EXPECT_EQ(cf_value(ContinuedFraction(Q{5})), (Position{1, 5}));
}

TEST(CfValue, Overflow) {
  EXPECT_THROW(cf_value(ContinuedFraction(Q{0xFFFF'FFFFull, 0xFFFF'FFFFull, 0xFFFF'FFFFull})),
               std::overflow_error);
}

TEST(CfRoundTrip, ExpandThenValueReducesToLowestTerms) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Entry> dist(1, Entry{1} << 40);
  for (int trial = 0; trial < 5000; ++trial) {
    const Entry a = dist(rng), b = dist(rng);
    const Entry g = std::gcd(a, b);
    EXPECT_EQ(cf_value(cf_expand(a, b)), (Position{a / g, b / g}.canonical()));
  }
}

TEST(CfRoundTrip, ValueThenExpandIsIdentity) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Entry> len(1, 8), quotient(1, 50);
  for (int trial = 0; trial < 5000; ++trial) {
    Q q(len(rng));
    for (auto& x : q) x = quotient(rng);
    if (q.size() > 1 && q.back() == 1) q.back() = 2;
    const ContinuedFraction cf(q);
    EXPECT_EQ(cf_expand(cf_value(cf)), cf) << to_string(cf);
  }
}

TEST(IndexI, Examples) {
  EXPECT_EQ(index_i(ContinuedFraction(Q{2, 3})), 1u);
  EXPECT_EQ(index_i(ContinuedFraction(Q{5})), 0u);
  EXPECT_EQ(index_i(ContinuedFraction(Q{2, 2, 2})), 2u);
  EXPECT_EQ(index_i(ContinuedFraction(Q{2, 2, 1, 5})), 1u);
  EXPECT_EQ(index_i(ContinuedFraction(Q{3, 2})), 0u);
  EXPECT_EQ(index_i(ContinuedFraction(Q{1, 1, 2})), 2u);
}

TEST(IndexI, PrefixFormulaMatchesDefinition) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Entry> len(1, 7), quotient(1, 4);
  for (int trial = 0; trial < 20000; ++trial) {
    Q q(len(rng));
    for (auto& x : q) x = quotient(rng);
    if (q.size() > 1 && q.back() == 1) q.back() = 2;
    const ContinuedFraction cf(q);
    ASSERT_EQ(index_i(cf), index_i_direct(cf)) << to_string(cf);
  }
}

TEST(IndexJ, Examples) {
  EXPECT_EQ(index_j(ContinuedFraction(Q{2, 3})), 0u);
  EXPECT_EQ(index_j(ContinuedFraction(Q{1, 1, 2})), 1u);
  EXPECT_EQ(index_j(ContinuedFraction(Q{2, 2, 2})), 1u);
  EXPECT_THROW(index_j(ContinuedFraction(Q{4})), TerminalPosition);
  EXPECT_THROW(index_j_direct(ContinuedFraction(Q{4})), TerminalPosition);
}

TEST(IndexJ, MinIdentityMatchesDefinition) {
  for (Entry a = 1; a <= 200; ++a) {
    for (Entry b = a + 1; b <= 200; ++b) {
      const auto cf = cf_expand(a, b);
      if (cf.degree() == 0) continue;
      ASSERT_EQ(index_j_direct(cf), std::min(index_i(cf), cf.degree() - 1)) << to_string(cf);
      ASSERT_EQ(index_j(cf), index_j_direct(cf));
    }
  }
}

}  // namespace
}  // namespace euclid
