#include <gtest/gtest.h>

#include "oracles.hpp"
#include "semacode/left_infinite.hpp"

using namespace semacode;
using oracle::from;

namespace {

// Letter at position i (from the right, 1-based) of period^{-ω}·tail.
Letter naive_letter(const Word& period, const Word& tail, std::size_t i) {
  if (i <= tail.size()) return tail[tail.size() - i];
  const std::size_t j = (i - tail.size() - 1) % period.size();
  return period[period.size() - 1 - j];
}

std::size_t naive_lcs(const Word& p, const Word& t, const Word& q, const Word& s, std::size_t depth) {
  std::size_t n = 0;
  while (n < depth && naive_letter(p, t, n + 1) == naive_letter(q, s, n + 1)) ++n;
  return n;
}

}  // namespace

TEST(LeftInfinite, CanonicalForm) {
  const auto x = LeftInfiniteWord::periodic(from("ab"), from("a"));
  EXPECT_EQ(x.period(), from("ba"));
  EXPECT_TRUE(x.tail().empty());
  EXPECT_EQ(LeftInfiniteWord::periodic(from("abab"), from("b")).period(), from("ab"));
  EXPECT_EQ(LeftInfiniteWord::periodic(from("abab"), from("b")).tail(), from("b"));
  EXPECT_EQ(x, LeftInfiniteWord::periodic(from("ba")));
  EXPECT_FALSE(x == LeftInfiniteWord::periodic(from("ab")));
  EXPECT_THROW(LeftInfiniteWord::periodic(Word{}), Error);
}

TEST(LeftInfinite, LettersAndSuffixesMatchNaive) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const Word p = oracle::random_word(rng, 2, 1, 4);
    const Word t = oracle::random_word(rng, 2, 0, 4);
    const auto x = LeftInfiniteWord::periodic(p, t);
    Word expect;
    for (std::size_t i = 12; i >= 1; --i) expect.push_back(naive_letter(p, t, i));
    ASSERT_EQ(x.xi(12), expect);
    const Word u = oracle::random_word(rng, 2, 0, 3);
    const auto xu = x.append(u);
    ASSERT_EQ(xu.xi(12), suffix(concat(expect, u), 12));
  }
}

TEST(LeftInfinite, LcsAndDistanceMatchNaive) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const Word p = oracle::random_word(rng, 2, 1, 3), t = oracle::random_word(rng, 2, 0, 4);
    const Word q = oracle::random_word(rng, 2, 1, 3), s = oracle::random_word(rng, 2, 0, 4);
    const auto x = LeftInfiniteWord::periodic(p, t), y = LeftInfiniteWord::periodic(q, s);
    const std::size_t n = naive_lcs(p, t, q, s, 64);
    const auto got = lcs_length(x, y, 64);
    if (n == 64) {
      ASSERT_EQ(x, y);
      ASSERT_TRUE(distance(x, y, 64).zero);
    } else {
      ASSERT_EQ(got, n);
      const auto d = distance(x, y, 64);
      ASSERT_EQ(d.kind, Distance::Kind::exact);
      ASSERT_EQ(d.exponent, n);
      ASSERT_DOUBLE_EQ(d.value(), std::ldexp(1.0, -static_cast<int>(n)));
    }
  }
}

TEST(LeftInfinite, RuleBasedDepthBound) {
  const auto x = LeftInfiniteWord::rule_based([](std::size_t i) -> Letter { return i % 3 == 0 ? 1 : 0; }, 50);
  EXPECT_EQ(x.xi(4), from("abaa"));
  EXPECT_THROW(x.letter_at(51), Error);
  EXPECT_THROW(x.letter_at(0), Error);
  EXPECT_THROW(x.period(), Error);
  const auto y = LeftInfiniteWord::rule_based([](std::size_t i) -> Letter { return i % 3 == 0 ? 1 : 0; }, 50);
  EXPECT_EQ(lcs_length(x, y, 40), std::nullopt);
  const auto d = distance(x, y, 40);
  EXPECT_EQ(d.kind, Distance::Kind::at_most);
  EXPECT_EQ(d.exponent, 40u);
  EXPECT_THROW(x == y, Error);
  EXPECT_THROW(lcs_length(x, y, 60), Error);
}

TEST(LeftInfinite, FormatRoundTrip) {
  const Alphabet a = Alphabet::binary();
  const auto x = LeftInfiniteWord::periodic(from("b"), from("ab"));
  EXPECT_EQ(format_left_infinite(a, x), "per:(b) tail:ab");
  EXPECT_EQ(parse_left_infinite(a, "per:(b) tail:ab"), x);
  EXPECT_EQ(parse_left_infinite(a, "per:(ab)"), LeftInfiniteWord::periodic(from("ab")));
  EXPECT_THROW(parse_left_infinite(a, "(ab)"), Error);
  EXPECT_THROW(parse_left_infinite(a, "per:(ab"), Error);
}
