#include <gtest/gtest.h>

#include <random>

#include "yamhall/descent_sets.hpp"
#include "yamhall/parse.hpp"
#include "yamhall/qsym_schur.hpp"

using namespace yamhall;

namespace {

const Diagram kDelta = parse_diagram_spec("c:0,3;1,3;2,3;0,2;1,2;0,1;1,1;2,1;0,0;1,0;2,0");
const Diagram kGamma = parse_diagram_spec("c:1,3;0,2;0,1;1,1");
const Diagram kColumn2({{0, 0}, {0, 1}});

Diagram subset(const Diagram& d, std::uint32_t mask) {
  std::vector<Cell> c;
  for (int i = 0; i < d.size(); ++i)
    if (mask >> i & 1u) c.push_back(d.cells()[static_cast<std::size_t>(i)]);
  return Diagram(c);
}

}  // namespace

TEST(Realizable, Basics) {
  EXPECT_TRUE(is_realizable(Diagram(std::vector<Cell>{}), kDelta));
  EXPECT_FALSE(is_realizable(Diagram({{0, 0}}), kColumn2));
  EXPECT_TRUE(is_realizable(Diagram({{0, 1}}), kColumn2));
  EXPECT_TRUE(is_realizable(kGamma, kDelta));
  EXPECT_THROW(is_realizable(Diagram({{3, 3}}), kColumn2), InvalidInput);
}

TEST(Realizable, TwoByTwoTopRight) {
  // A descent at the top right forces the top left cell to be one too.
  const Diagram sq = diagram_from_partition(Partition({2, 2}));
  EXPECT_FALSE(is_realizable(Diagram({{1, 1}}), sq));
  EXPECT_TRUE(is_realizable(Diagram({{0, 1}}), sq));
  EXPECT_TRUE(is_realizable(Diagram({{0, 1}, {1, 1}}), sq));
}

TEST(Realizable, MatchesNonvanishingRPolynomial) {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<int> coord(0, 3);
  int realizable = 0, not_realizable = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + trial % 6;
    std::vector<Cell> c;
    while (static_cast<int>(c.size()) < n) {
      Cell x{coord(rng), coord(rng)};
      if (std::find(c.begin(), c.end(), x) == c.end()) c.push_back(x);
    }
    const Diagram d(c);
    const FillingIndex fx(d);
    const auto by_mask = r_polynomials_by_descents(d);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const Diagram g = subset(d, mask);
      const auto it = by_mask.find(mask);
      const bool nonzero = it != by_mask.end() && !it->second.is_zero();
      EXPECT_EQ(is_realizable(g, d), nonzero) << d.to_string() << " / " << g.to_string();
      (nonzero ? realizable : not_realizable)++;
    }
  }
  EXPECT_GT(realizable, 100);
  EXPECT_GT(not_realizable, 100);
}

TEST(LeadingWord, Examples) {
  EXPECT_EQ(leading_yam_word(kGamma, kDelta), parse_word("12131221111"));
  EXPECT_EQ(leading_term(kGamma, kDelta), Partition({7, 3, 1}));
  EXPECT_EQ(leading_yam_word(Diagram({{0, 1}}), kColumn2), parse_word("21"));
  EXPECT_EQ(leading_term(Diagram({{0, 1}}), kColumn2), Partition({1, 1}));
  EXPECT_EQ(leading_yam_word(Diagram(std::vector<Cell>{}), kDelta), Word(11, 1));
  EXPECT_EQ(leading_term(Diagram(std::vector<Cell>{}), kDelta), Partition({11}));
  EXPECT_THROW(leading_yam_word(Diagram({{0, 0}}), kColumn2), InvalidInput);
}

TEST(LeadingWord, HasTheRightStatisticsAndLeadsTheExpansion) {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<int> coord(0, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 6;
    std::vector<Cell> c;
    while (static_cast<int>(c.size()) < n) {
      Cell x{coord(rng), coord(rng)};
      if (std::find(c.begin(), c.end(), x) == c.end()) c.push_back(x);
    }
    const Diagram d(c);
    const FillingIndex fx(d);
    for (const auto& [mask, s] : r_schur_by_descents(d)) {
      const Diagram g = fx.cells_of(mask);
      ASSERT_TRUE(is_realizable(g, d));
      const Word w = leading_yam_word(g, d);
      EXPECT_EQ(fx.inv(w), 0);
      EXPECT_EQ(fx.descent_mask(w), mask);
      EXPECT_FALSE(jams(w, d));
      const Partition mu = leading_term(g, d);
      EXPECT_EQ(s.coeff(mu).coeff(0, 0), 1) << d.to_string() << " / " << g.to_string();
      for (const auto& [lambda, p] : s.terms()) EXPECT_LE(lambda, mu);
    }
  }
}
