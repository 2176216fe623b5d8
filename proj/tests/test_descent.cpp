#include "test_util.hpp"

using namespace itercurve;
using namespace testutil;

namespace {
P1Comb neg(const P1Comb& x) {
  P1Comb out(x.level);
  for (auto& [w, c] : x.terms) out.add(w, -c);
  return out;
}
}  // namespace

TEST(Theta, LetterImages) {
  using namespace letters;
  P1Comb w3 = theta(CurveLetter(Curve::g, 3));
  ASSERT_EQ(w3.size(), 1u);
  EXPECT_EQ(w3.terms.at({zero(4)}), one(4));
  P1Comb w6 = theta(CurveLetter(Curve::h, 6));
  ASSERT_EQ(w6.size(), 1u);
  EXPECT_EQ(w6.terms.at({one(6)}), Cyc(6, -1));
  P1Comb w5 = theta(CurveLetter(Curve::h, 5));
  EXPECT_EQ(w5.terms.at({zero(6)}), Cyc(6, Rat(1, 2)));
  EXPECT_EQ(w5.terms.at({minus_two()}), Cyc(6, Rat(-1, 2)));
}

TEST(Theta, CoefficientSumsAreRational) {
  for (Curve c : {Curve::g, Curve::h})
    for (int a : alphabet(c)) {
      P1Comb t = theta(CurveLetter(c, a));
      Cyc s(curve_level(c), 0);
      for (auto& [w, q] : t.terms) s = s + q;
      EXPECT_TRUE(s.is_rational()) << curve_name(c) << a;
    }
}

TEST(Pullback, CoefficientCountsAndLetters) {
  P1Comb p = pullback_word(parse_word("1,0", Curve::g));
  // (-2 e1 + e_i + e_-i)(e0 - e_i - e_-i): 9 words
  EXPECT_EQ(p.size(), 9u);
  EXPECT_THROW(pullback_word(parse_word("0,2", Curve::g)), UsageError);
}

TEST(Pullback, NoDivergentTermsForAdmissibleWords) {
  for (Curve c : {Curve::g, Curve::h})
    for (int k = 1; k <= 3; ++k)
      for (auto& w : enumerate_admissible(c, k)) {
        P1Comb p = pullback_word(w);
        int n = curve_level(c);
        for (auto& [ls, q] : p.terms) {
          EXPECT_FALSE(ls.front().is_zero()) << w.to_string();
          EXPECT_FALSE(ls.back() == Cyc(n, 1)) << w.to_string();
        }
      }
}

TEST(Pullback, ShuffleCompatible) {
  // pullback is an algebra map for the shuffle product; first and last
  // letters of every interleaving come from u or v, so all terms stay admissible
  for (int trial = 0; trial < 40; ++trial) {
    Curve c = uniform(0, 1) ? Curve::g : Curve::h;
    CurveWord u = random_admissible(c, static_cast<int>(uniform(1, 2)));
    CurveWord v = random_admissible(c, static_cast<int>(uniform(1, 2)));
    P1Comb lhs = shuffle(pullback_word(u), pullback_word(v));
    P1Comb rhs(curve_level(c));
    for (auto& [w, m] : shuffle(u, v)) {
      ASSERT_TRUE(is_admissible(w));
      for (auto& [ls, q] : pullback_word(w).terms) rhs.add(ls, q * m);
    }
    EXPECT_EQ(lhs, rhs) << u.to_string() << " | " << v.to_string();
  }
}

TEST(Galois, InvarianceExhaustive) {
  for (int k = 1; k <= 4; ++k)
    for (auto& w : enumerate_admissible(Curve::g, k)) EXPECT_TRUE(is_invariant(pullback_word(w))) << w.to_string();
  for (int k = 1; k <= 3; ++k)
    for (auto& w : enumerate_admissible(Curve::h, k)) EXPECT_TRUE(is_invariant(pullback_word(w))) << w.to_string();
}

TEST(Galois, SigmaIsInvolution) {
  for (int trial = 0; trial < 50; ++trial) {
    int n = uniform(0, 1) ? 4 : 6;
    P1Comb x(n);
    for (int t = 0; t < 4; ++t) {
      P1Word w;
      for (int j = 0; j < 3; ++j) w.push_back(random_cyc(n));
      x.add(w, random_cyc(n));
    }
    EXPECT_EQ(galois_sigma(galois_sigma(x)), x);
  }
}

TEST(Parity, CountsSpecialLetter) {
  EXPECT_EQ(parity_component(parse_word("2,2,0", Curve::g)), 0);
  EXPECT_EQ(parity_component(parse_word("2,0", Curve::g)), 1);
  EXPECT_EQ(parity_component(parse_word("1,0", Curve::g)), 0);
  EXPECT_EQ(parity_component(parse_word("4,4,4,0", Curve::h)), 1);
  EXPECT_THROW(parity_component(parse_word("0", Curve::g)), UsageError);
}

TEST(Parity, CoefficientSupportExhaustive) {
  for (int k = 1; k <= 4; ++k)
    for (auto& w : enumerate_admissible(Curve::g, k)) EXPECT_NO_THROW(parity_component(w)) << w.to_string();
  for (int k = 1; k <= 3; ++k)
    for (auto& w : enumerate_admissible(Curve::h, k)) EXPECT_NO_THROW(parity_component(w)) << w.to_string();
}

TEST(BasisSign, AlternatesWithWeight) {
  for (Curve c : {Curve::g, Curve::h})
    for (int k = 1; k <= 8; ++k) EXPECT_EQ(basis_sign(k, c), k % 2 ? 1 : -1) << k;
  EXPECT_THROW(basis_sign(0, Curve::g), UsageError);
}

TEST(P1Comb, LevelMismatch) {
  P1Comb x(4);
  EXPECT_THROW(x.add({Cyc(4, 1)}, Cyc(6, 1)), UsageError);
  EXPECT_THROW(concat(P1Comb(4), P1Comb(6)), UsageError);
  EXPECT_EQ(neg(neg(pullback_word(parse_word("2", Curve::g)))), pullback_word(parse_word("2", Curve::g)));
}
