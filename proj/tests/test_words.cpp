#include "test_util.hpp"

using namespace itercurve;
using namespace testutil;

namespace {
long binom(long n, long k) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return c.get_si();
}
}  // namespace

TEST(Words, ParseAndPrint) {
  CurveWord w = parse_word("2,2,0", Curve::g);
  EXPECT_EQ(w.letters, (std::vector<int>{2, 2, 0}));
  EXPECT_EQ(w.to_string(), "2,2,0");
  EXPECT_EQ(parse_word("4 4 0", Curve::h).letters, (std::vector<int>{4, 4, 0}));
  EXPECT_EQ(parse_word("", Curve::g).weight(), 0);
  EXPECT_THROW(parse_word("2,x", Curve::g), UsageError);
  EXPECT_THROW(parse_word("2.5", Curve::g), UsageError);
  EXPECT_THROW(parse_word("4", Curve::g), UsageError);  // not a g letter
  EXPECT_THROW(parse_word("2", Curve::h), UsageError);  // not an h letter
}

TEST(Words, AdmissibilityRules) {
  EXPECT_TRUE(is_admissible(parse_word("1,0", Curve::g)));
  EXPECT_TRUE(is_admissible(parse_word("2", Curve::g)));
  EXPECT_FALSE(is_admissible(parse_word("0,2", Curve::g)));
  EXPECT_FALSE(is_admissible(parse_word("3,2", Curve::g)));
  EXPECT_FALSE(is_admissible(parse_word("2,1", Curve::g)));
  EXPECT_TRUE(is_admissible(parse_word("4,5", Curve::h)));
  EXPECT_FALSE(is_admissible(parse_word("0,0", Curve::h)));
  EXPECT_FALSE(is_admissible(parse_word("5,4", Curve::h)));
  EXPECT_FALSE(is_admissible(parse_word("4,6", Curve::h)));
  EXPECT_FALSE(is_admissible(parse_word("4,1", Curve::h)));
}

TEST(Words, AdmissibleCounts) {
  const long g[] = {1, 6, 24, 96, 384}, h[] = {1, 9, 45, 225, 1125};
  for (int k = 1; k <= 5; ++k) {
    EXPECT_EQ(static_cast<long>(enumerate_admissible(Curve::g, k).size()), g[k - 1]) << k;
    EXPECT_EQ(static_cast<long>(enumerate_admissible(Curve::h, k).size()), h[k - 1]) << k;
  }
  EXPECT_THROW(enumerate_admissible(Curve::g, 0), UsageError);
}

TEST(Words, EnumerationIsSortedAndDistinct) {
  for (Curve c : {Curve::g, Curve::h}) {
    auto ws = enumerate_admissible(c, 3);
    for (size_t i = 1; i < ws.size(); ++i) EXPECT_TRUE(ws[i - 1] < ws[i]);
    for (auto& w : ws) EXPECT_TRUE(is_admissible(w));
  }
}

TEST(Shuffle, SmallExample) {
  CurveWord a(Curve::g, {2}), b(Curve::g, {1, 0});
  WordComb s = shuffle(a, b);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s.at(CurveWord(Curve::g, {2, 1, 0})), 1);
  EXPECT_EQ(s.at(CurveWord(Curve::g, {1, 2, 0})), 1);
  EXPECT_EQ(s.at(CurveWord(Curve::g, {1, 0, 2})), 1);
  WordComb sq = shuffle(a, a);
  EXPECT_EQ(sq.at(CurveWord(Curve::g, {2, 2})), 2);
  EXPECT_THROW(shuffle(a, CurveWord(Curve::h, {4})), UsageError);
}

TEST(Shuffle, CountPropertyRandom) {
  // total multiplicity of u sh v is C(|u|+|v|, |u|)
  for (int trial = 0; trial < 200; ++trial) {
    Curve c = uniform(0, 1) ? Curve::g : Curve::h;
    int a = static_cast<int>(uniform(0, 4)), b = static_cast<int>(uniform(0, 4));
    CurveWord u = random_word(c, a), v = random_word(c, b);
    Rat total = 0;
    for (auto& [w, m] : shuffle(u, v)) {
      EXPECT_EQ(w.weight(), a + b);
      total += m;
    }
    EXPECT_EQ(total, binom(a + b, a));
  }
}

TEST(Shuffle, CommutativeAndAssociativeRandom) {
  for (int trial = 0; trial < 60; ++trial) {
    Curve c = uniform(0, 1) ? Curve::g : Curve::h;
    CurveWord u = random_word(c, static_cast<int>(uniform(1, 3)));
    CurveWord v = random_word(c, static_cast<int>(uniform(1, 3)));
    CurveWord w = random_word(c, static_cast<int>(uniform(1, 2)));
    EXPECT_EQ(shuffle(u, v), shuffle(v, u));
    WordComb uv = shuffle(u, v), vw = shuffle(v, w);
    WordComb left = shuffle(uv, WordComb{{w, 1}}), right = shuffle(WordComb{{u, 1}}, vw);
    EXPECT_EQ(left, right);
  }
}

TEST(Shuffle, PreservesLetterMultiset) {
  for (int trial = 0; trial < 100; ++trial) {
    CurveWord u = random_word(Curve::h, 3), v = random_word(Curve::h, 2);
    std::vector<int> base = u.letters;
    base.insert(base.end(), v.letters.begin(), v.letters.end());
    std::sort(base.begin(), base.end());
    for (auto& [w, m] : shuffle(u, v)) {
      std::vector<int> s = w.letters;
      std::sort(s.begin(), s.end());
      EXPECT_EQ(s, base);
    }
  }
}
