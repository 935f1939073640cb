#include <gtest/gtest.h>

#include <bit>
#include <numeric>
#include <random>

#include "yamhall/words.hpp"

using namespace yamhall;

namespace {

Word W(const char* s) { return parse_word(s); }

Word random_perm(std::mt19937_64& rng, int n) {
  Word p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST(Signature, Examples) {
  EXPECT_EQ(signature(W("483691257")).str(), "+--+-+-+");
  EXPECT_EQ(signature(W("3214")).str(), "--+");
  EXPECT_EQ(signature(W("12345")).str(), "++++");
  EXPECT_THROW(signature(Word{}), InvalidInput);
  EXPECT_THROW(signature(W("112")), InvalidInput);
}

TEST(Signature, ReversalNegatesAndReverses) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Word p = random_perm(rng, 2 + trial % 8);
    std::string s = signature(p).str();
    std::reverse(s.begin(), s.end());
    for (char& ch : s) ch = ch == '+' ? '-' : '+';
    EXPECT_EQ(signature(reverse_values(p)).str(), s);
  }
}

TEST(Standardize, Examples) {
  EXPECT_EQ(standardize(W("38631242")), W("48751263"));
  EXPECT_EQ(standardize(W("17215")), W("15324"));
  EXPECT_EQ(standardize(W("3142")), W("3142"));
}

TEST(Unstandardize, Examples) {
  EXPECT_EQ(unstandardize(W("48751263")), W("24321121"));
  EXPECT_EQ(unstandardize(W("17215")), W("13212"));
  EXPECT_EQ(unstandardize(W("12345")), W("11111"));
  EXPECT_EQ(unstandardize(W("38631242")), W("24321121"));
}

TEST(Unstandardize, Identities) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> letter(1, 4);
  for (int trial = 0; trial < 500; ++trial) {
    Word w(static_cast<std::size_t>(1 + trial % 9));
    for (int& v : w) v = letter(rng);
    EXPECT_EQ(standardize(unstandardize(w)), standardize(w));
    EXPECT_EQ(unstandardize(unstandardize(w)), unstandardize(w));
    const Word p = standardize(w);
    EXPECT_EQ(standardize(p), p);
    EXPECT_EQ(standardize(unstandardize(p)), p);
  }
}

TEST(Restrict, Examples) {
  EXPECT_EQ(restrict_word(W("483691257"), {6, 7, 8, 9}), W("8697"));
  EXPECT_EQ(restrict_word(W("483691257"), {1, 2, 3, 4, 5, 6, 7, 8, 9}), W("483691257"));
  EXPECT_TRUE(restrict_word(W("483691257"), {}).empty());
}

TEST(StrictPattern, Examples) {
  const auto occ = strict_pattern_find(W("53482617"), W("231"));
  const auto hit = std::find(occ.begin(), occ.end(), PatternOccurrence{1, {2, 3, 5}});
  EXPECT_NE(hit, occ.end());

  const auto self = strict_pattern_find(W("3142"), W("3142"));
  ASSERT_EQ(self.size(), 1u);
  EXPECT_EQ(self[0], (PatternOccurrence{0, {1, 2, 3, 4}}));

  const auto five = strict_pattern_find(W("12543"), W("12543"));
  ASSERT_EQ(five.size(), 1u);
  EXPECT_EQ(five[0].indices, (std::vector<int>{1, 2, 3, 4, 5}));
}

TEST(StrictPattern, MatchesSubsetOracle) {
  std::mt19937_64 rng(9);
  const std::vector<Word> patterns{W("231"), W("1342"), W("2431"), W("12543"), W("21")};
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + trial % 6;
    const Word pi = random_perm(rng, n);
    for (const Word& p : patterns) {
      const int m = static_cast<int>(p.size());
      if (m > n) continue;
      std::vector<PatternOccurrence> expected;
      // All m-subsets of indices, in shift order then index order.
      for (int k = 0; k + m <= n; ++k)
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
          if (std::popcount(mask) != m) continue;
          std::vector<int> idx;
          for (int i = 0; i < n; ++i)
            if (mask >> i & 1u) idx.push_back(i);
          bool ok = true;
          for (int j = 0; j < m; ++j) ok = ok && pi[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])] == p[static_cast<std::size_t>(j)] + k;
          if (!ok) continue;
          for (int& i : idx) ++i;
          expected.push_back({k, idx});
        }
      EXPECT_EQ(strict_pattern_find(pi, p), expected) << format_word(pi) << " / " << format_word(p);
    }
  }
}

TEST(ReverseValues, Examples) {
  EXPECT_EQ(reverse_values(W("2143")), W("3412"));
  EXPECT_EQ(reverse_values(W("53482617")), W("46517382"));
  EXPECT_EQ(reverse_values(reverse_values(W("53482617"))), W("53482617"));
  EXPECT_THROW(reverse_values(W("113")), InvalidInput);
}

TEST(WordText, ParseAndFormat) {
  EXPECT_EQ(parse_word("323121"), (Word{3, 2, 3, 1, 2, 1}));
  EXPECT_EQ(parse_word("10,2,1"), (Word{10, 2, 1}));
  EXPECT_EQ(format_word(Word{10, 2, 1}), "10,2,1");
  EXPECT_EQ(format_word(Word{3, 2, 1}), "321");
  EXPECT_THROW(parse_word("12a"), InvalidInput);
  EXPECT_THROW(parse_word("1,,2"), InvalidInput);
  EXPECT_THROW(parse_word("0"), InvalidInput);
}
