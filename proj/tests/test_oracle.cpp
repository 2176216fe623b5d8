#include "test_util.hpp"

using namespace itercurve;
using namespace testutil;

TEST(Quadrature, WeightOneLogarithm) {
  QuadResult r = quad_iterated_ld(PathSpec::chord(0, 1), std::vector<cld>{-1});
  EXPECT_NEAR(static_cast<double>(r.value.real()), std::log(2.0), 1e-15);
  EXPECT_NEAR(static_cast<double>(r.value.imag()), 0.0, 1e-15);
  EXPECT_LT(r.err, 1e-12L);
}

TEST(Quadrature, EndpointSingularityZetaTwo) {
  // I(0; 1, 0; 1) = -zeta(2)
  QuadResult r = quad_iterated_ld(PathSpec::chord(0, 1), std::vector<cld>{1, 0});
  EXPECT_NEAR(static_cast<double>(r.value.real()), -1.6449340668482264, 1e-12);
}

TEST(Quadrature, CurveWordsMatchFrozenValues) {
  EXPECT_NEAR(static_cast<double>(quad_curve_word(parse_word("1,0", Curve::g)).value.real()), 1.6449340668482264, 1e-12);
  EXPECT_NEAR(static_cast<double>(quad_curve_word(parse_word("2,3", Curve::g)).value.real()), 1.8319311883544380, 1e-12);
  EXPECT_NEAR(static_cast<double>(quad_curve_word(parse_word("4,0", Curve::h)).value.real()), 0.52743598167847430, 1e-12);
  EXPECT_NEAR(static_cast<double>(quad_curve_word(parse_word("4,5", Curve::h)).value.real()), 0.32225881883312757, 1e-12);
}

TEST(Quadrature, AgreesWithSeriesEvaluatorWeightTwo) {
  Context ctx(30);
  for (Curve c : {Curve::g, Curve::h})
    for (int k = 1; k <= 2; ++k)
      for (auto& w : enumerate_admissible(c, k)) {
        QuadResult q = quad_curve_word(w);
        double v = eval_curve_word(w, ctx).to_double();
        EXPECT_NEAR(static_cast<double>(q.value.real()), v, 1e-10) << curve_name(c) << ' ' << w.to_string();
        EXPECT_NEAR(static_cast<double>(q.value.imag()), 0.0, 1e-10) << curve_name(c) << ' ' << w.to_string();
      }
}

TEST(Quadrature, PathIndependenceAwayFromPoles) {
  std::vector<cld> ls{-1, 2, cld(0, 3)};
  PathSpec straight = PathSpec::chord(0, 1);
  PathSpec bent = PathSpec::chord(0, cld(0.5L, 0.4L));
  bent.then(Segment::make_chord(cld(0.5L, 0.4L), 1));
  QuadResult a = quad_iterated_ld(straight, ls), b = quad_iterated_ld(bent, ls);
  EXPECT_LT(std::abs(a.value - b.value), 1e-13L);
}

TEST(Quadrature, ArcIntegralOfDzOverZ) {
  PathSpec arc{{Segment::make_arc(0, 1, cld(0, 1))}};
  QuadResult r = quad_path_integral(arc, [](cld z) { return cld(1) / z; }, {});
  EXPECT_NEAR(static_cast<double>(r.value.real()), 0.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(r.value.imag()), M_PI / 2, 1e-15);
}

TEST(Quadrature, ReversedPathNegatesWeightOne) {
  PathSpec p = PathSpec::chord(0, cld(0.3L, 0.2L));
  std::vector<cld> ls{cld(-1, 1)};
  QuadResult a = quad_iterated_ld(p, ls), b = quad_iterated_ld(p.reversed(), ls);
  EXPECT_LT(std::abs(a.value + b.value), 1e-15L);
}

TEST(Quadrature, Errors) {
  EXPECT_THROW(quad_iterated_ld(PathSpec::chord(0, 1), std::vector<cld>{-1, -1, -1, -1, -1}), UsageError);
  EXPECT_THROW(quad_iterated_ld(PathSpec::chord(0, 1), std::vector<cld>{0}), UsageError);
  EXPECT_THROW(quad_iterated_ld(PathSpec::chord(0, 1), std::vector<cld>{-1, 1}), UsageError);
  EXPECT_THROW(quad_iterated_ld(PathSpec::chord(0, 1), std::vector<cld>{0.5L}), UsageError);
  EXPECT_THROW(quad_iterated(PathSpec::chord(0, 1), {Cyc(4, -1)}, Context(40)), UsageError);
  EXPECT_THROW(Segment::make_arc(0, 1, 2), UsageError);
}

TEST(ArcLemma, TrivialArc) {
  ArcLemmaResult r = verify_arc_lemma(Cyc(4, 1), Context(20));
  EXPECT_LT(r.residual1, 1e-15);
  EXPECT_LT(r.residual2, 1e-15);
}

TEST(ArcLemma, LeftSidesAtI) {
  ArcLemmaResult r = verify_arc_lemma(letters::i(), Context(20));
  // independent value of the arc integral of log(1-z)/z from 1 to i
  EXPECT_NEAR(static_cast<double>(r.lhs1.real()), 1.850550825204254741, 1e-13);
  EXPECT_NEAR(static_cast<double>(r.lhs1.imag()), -0.91596559417721901505, 1e-13);
  EXPECT_LT(r.residual2, 1e-12);
  EXPECT_LT(r.quad_err1, 1e-12L);
}

TEST(ArcLemma, SecondIdentityAtXi6) {
  ArcLemmaResult r = verify_arc_lemma(Cyc::xi(6), Context(20));
  EXPECT_LT(r.residual2, 1e-12);
}

TEST(ArcLemma, Errors) {
  EXPECT_THROW(verify_arc_lemma(letters::i(), Context(40)), UsageError);
  EXPECT_THROW(verify_arc_lemma(Cyc(4, 2), Context(20)), UsageError);
  EXPECT_THROW(verify_arc_lemma(Cyc(4, -1), Context(20)), UsageError);
}
