#include "test_util.hpp"

using namespace itercurve;
using namespace testutil;

TEST(Constants, MatchIndependentSeriesAt200Digits) {
  Context ctx(200);
  mpfr_prec_t p = ctx.bits();
  EXPECT_LT(gap(const_eval("pi", ctx).value, machin_pi(p)), 1e-195);
  EXPECT_LT(gap(const_eval("log2", ctx).value, series_log2(p)), 1e-195);
  EXPECT_LT(gap(const_eval("log3", ctx).value, series_log3(p)), 1e-195);
}

TEST(Constants, MatchFrozenValues) {
  Context ctx(60);
  EXPECT_LT(gap(const_eval("pi", ctx).value, ref::pi), 1e-58);
  EXPECT_LT(gap(const_eval("log2", ctx).value, ref::log2), 1e-58);
  EXPECT_LT(gap(const_eval("log3", ctx).value, ref::log3), 1e-58);
  EXPECT_LT(gap(const_eval("catalan", ctx).value, ref::catalan), 1e-58);
}

TEST(Constants, ErrorBoundsMeetTarget) {
  Context ctx(80);
  for (auto name : {"pi", "log2", "log3", "catalan"}) EXPECT_TRUE(const_eval(name, ctx).err <= ctx.target()) << name;
}

TEST(Constants, UnknownNameIsUsageError) { EXPECT_THROW(const_eval("euler", Context(30)), UsageError); }

TEST(Zeta, MatchesMpfrZetaAndBound) {
  Context ctx(100);
  for (int s = 2; s <= 12; ++s) {
    ApproxR z = zeta(s, ctx);
    EXPECT_TRUE(z.err <= ctx.target()) << s;
    EXPECT_LT(gap(z.value, mpfr_zeta(s, ctx.bits())), 1e-98) << s;
  }
}

TEST(Zeta, FrozenValues) {
  Context ctx(60);
  EXPECT_LT(gap(zeta(2, ctx).value, ref::zeta2), 1e-58);
  EXPECT_LT(gap(zeta(3, ctx).value, ref::zeta3), 1e-58);
  EXPECT_LT(gap(zeta(5, ctx).value, ref::zeta5), 1e-58);
}

TEST(Zeta, EvenValuesFromBernoulli) {
  // zeta(2k) = (-1)^{k+1} B_2k (2 pi)^{2k} / (2 (2k)!)
  Context ctx(60);
  mpfr_prec_t p = ctx.bits();
  Real twopi = machin_pi(p) * 2L;
  for (int k = 1; k <= 6; ++k) {
    Rat f = 1;
    for (int i = 2; i <= 2 * k; ++i) f *= i;
    Rat c = bernoulli_even(k) / (2 * f) * (k % 2 ? 1 : -1);
    Real expect = rat_real(c, p) * pow_si(twopi, 2 * k);
    EXPECT_LT(gap(zeta(2 * k, ctx).value, expect), 1e-57) << k;
  }
}

TEST(Zeta, RejectsPoleAndBelow) {
  EXPECT_THROW(zeta(1, Context(30)), UsageError);
  EXPECT_THROW(zeta(0, Context(30)), UsageError);
}

TEST(Bernoulli, KnownValues) {
  EXPECT_EQ(bernoulli_even(1), Rat(1, 6));
  EXPECT_EQ(bernoulli_even(2), Rat(-1, 30));
  EXPECT_EQ(bernoulli_even(3), Rat(1, 42));
  EXPECT_EQ(bernoulli_even(5), Rat(5, 66));
  EXPECT_EQ(bernoulli_even(6), Rat(-691, 2730));
  EXPECT_EQ(bernoulli_even(10), Rat(-174611, 330));
  EXPECT_THROW(bernoulli_even(0), UsageError);
}

TEST(Bernoulli, SatisfyRecurrence) {
  // sum_{j=0}^{n-1} C(n, j) B_j = 0 for n >= 2, with B_1 = -1/2 and odd B_j = 0 beyond.
  for (int n = 3; n <= 30; ++n) {
    Rat s = 1 - Rat(n, 2);  // j = 0, 1
    mpz_class c;
    for (int j = 2; j < n; j += 2) {
      mpz_bin_uiui(c.get_mpz_t(), n, j);
      s += Rat(c) * bernoulli_even(j / 2);
    }
    EXPECT_EQ(s, 0) << n;
  }
}

TEST(Hurwitz, HalfArgument) {
  // zeta(s, 1/2) = (2^s - 1) zeta(s)
  Context ctx(60);
  for (int s = 2; s <= 7; ++s) {
    Real expect = mpfr_zeta(s, ctx.bits()) * Rat((mpz_class(1) << s) - 1);
    EXPECT_LT(gap(hurwitz_zeta(s, Rat(1, 2), ctx).value, expect), 1e-57) << s;
  }
}

TEST(Hurwitz, FrozenThird) {
  Context ctx(60);
  EXPECT_LT(gap(hurwitz_zeta(3, Rat(1, 3), ctx).value, ref::hurwitz3_third), 1e-56);
}

TEST(Hurwitz, DuplicationProperty) {
  // duplication: zeta(s, a) + zeta(s, a + 1/2) = 2^s zeta(s, 2a), 0 < a <= 1/2
  Context ctx(50);
  for (int trial = 0; trial < 12; ++trial) {
    long den = uniform(3, 12), num = uniform(1, den / 2);
    Rat a(num, den);
    int s = static_cast<int>(uniform(2, 6));
    Real lhs = hurwitz_zeta(s, a, ctx).value + hurwitz_zeta(s, a + Rat(1, 2), ctx).value;
    Real rhs = hurwitz_zeta(s, 2 * a, ctx).value * Rat(mpz_class(1) << s);
    EXPECT_LT(gap(lhs, rhs), 1e-45) << a.get_str() << " s=" << s;
  }
}

TEST(Hurwitz, RejectsBadArgs) {
  EXPECT_THROW(hurwitz_zeta(1, Rat(1, 2), Context(30)), UsageError);
  EXPECT_THROW(hurwitz_zeta(2, Rat(0), Context(30)), UsageError);
  EXPECT_THROW(hurwitz_zeta(2, Rat(3, 2), Context(30)), UsageError);
}

TEST(DirichletL, FrozenValues) {
  Context ctx(60);
  EXPECT_LT(gap(dirichlet_L_chi3(2, ctx).value, ref::L2), 1e-58);
  EXPECT_LT(gap(dirichlet_L_chi3(3, ctx).value, ref::L3), 1e-58);
  EXPECT_LT(gap(dirichlet_L_chi3(4, ctx).value, ref::L4), 1e-58);
}

TEST(DirichletL, OddValueFromPi) {
  // L(3, chi_-3) = 4 pi^3 / (81 sqrt3)
  Context ctx(60);
  mpfr_prec_t p = ctx.bits();
  Real pi = machin_pi(p);
  Real expect = pi * pi * pi * Rat(4, 81) / sqrt(Real(3L, p));
  EXPECT_LT(gap(dirichlet_L_chi3(3, ctx).value, expect), 1e-57);
}

TEST(DirichletL, DirectCharacterSumAgrees) {
  // partial sum 1 - 1/2^s + 1/4^s - 1/5^s ... plus tail bound, s = 6
  Context ctx(20);
  long double s = 0;
  for (long n = 1; n < 200000; ++n) {
    long r = n % 3;
    if (r == 0) continue;
    s += (r == 1 ? 1.0L : -1.0L) / std::pow(static_cast<long double>(n), 6);
  }
  EXPECT_NEAR(dirichlet_L_chi3(6, ctx).to_double(), static_cast<double>(s), 1e-15);
}

TEST(Context, RejectsLowPrecision) {
  EXPECT_THROW(Context(5), UsageError);
  EXPECT_THROW(Context(30, -1), UsageError);
  EXPECT_EQ(Context(30).doubled().precision_digits, 60);
}

TEST(Bound, ArithmeticRoundsUp) {
  Bound a(0.1), b(0.2);
  EXPECT_GE((a + b).to_double(), 0.3);
  EXPECT_TRUE(Bound::pow10(-5) <= Bound(1e-5));
  EXPECT_THROW(Bound(-1.0), NumericError);
}
