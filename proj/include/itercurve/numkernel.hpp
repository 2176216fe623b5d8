#ifndef ITERCURVE_NUMKERNEL_HPP
#define ITERCURVE_NUMKERNEL_HPP

#include <mutex>
#include <string>
#include <vector>

#include "real.hpp"

namespace itercurve {

// pi, log2, log3 or catalan, correctly rounded by MPFR at ctx.bits().
inline ApproxR const_eval(const std::string& name, const Context& ctx) {
  Real v(ctx.bits());
  if (name == "pi") {
    mpfr_const_pi(v.get(), MPFR_RNDN);
  } else if (name == "log2") {
    mpfr_const_log2(v.get(), MPFR_RNDN);
  } else if (name == "log3") {
    mpfr_set_ui(v.get(), 3, MPFR_RNDN);
    mpfr_log(v.get(), v.get(), MPFR_RNDN);
  } else if (name == "catalan") {
    mpfr_const_catalan(v.get(), MPFR_RNDN);
  } else {
    throw UsageError("unknown constant '" + name + "'");
  }
  return {v, Bound::ulp_of(v, v.prec())};
}

namespace detail {

// B_{2j}/(2j)! for j = 1..n, from tangent numbers (Brent-Harvey):
// B_{2k} = (-1)^{k-1} 2k T_k / (4^k (4^k - 1)).
inline Rat bernoulli_over_factorial(int n) {
  static std::mutex mu;
  static std::vector<Rat> table(1);  // index 0 unused
  std::lock_guard<std::mutex> lock(mu);
  if (static_cast<int>(table.size()) > n) return table[n];
  int m = std::max(n, 2 * static_cast<int>(table.size()));
  std::vector<mpz_class> t(m + 1);
  t[1] = 1;
  for (int k = 2; k <= m; ++k) t[k] = (k - 1) * t[k - 1];
  for (int k = 2; k <= m; ++k)
    for (int j = k; j <= m; ++j) t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
  std::vector<Rat> out(m + 1);
  mpz_class fact = 1;
  for (int k = 1; k <= m; ++k) {
    fact *= (2 * k - 1);
    fact *= (2 * k);
    mpz_class four_k = mpz_class(1) << (2 * k);
    Rat b(2 * k * t[k], four_k * (four_k - 1));
    b.canonicalize();
    if (k % 2 == 0) b = -b;
    out[k] = b / fact;
  }
  table = std::move(out);
  return table[n];
}

}  // namespace detail

// Exact Bernoulli number B_{2k}, k >= 1.
inline Rat bernoulli_even(int k) {
  if (k < 1) throw UsageError("bernoulli_even: k must be >= 1");
  mpz_class fact = 1;
  for (int i = 2; i <= 2 * k; ++i) fact *= i;
  return detail::bernoulli_over_factorial(k) * fact;
}

// Hurwitz zeta(s, a) for integer s >= 2 and rational 0 < a <= 1 by
// Euler-Maclaurin summation:
//   sum_{n<N} (n+a)^-s + x^{1-s}/(s-1) + x^-s/2 + sum_j B_2j/(2j)! (s)_{2j-1} x^{1-s-2j},
// x = N + a. Since x^-s is completely monotone the remainder after the last
// correction is bounded by the first omitted correction; we take twice that.
inline ApproxR hurwitz_zeta(int s, const Rat& a, const Context& ctx) {
  if (s < 2) throw UsageError("hurwitz_zeta: s must be >= 2");
  if (a <= 0 || a > 1) throw UsageError("hurwitz_zeta: a must lie in (0,1]");
  const mpfr_prec_t prec = ctx.bits();
  const Bound goal = ctx.internal_target() * 0.25;
  for (long n_terms = std::max(16, ctx.working_digits() + 10);; n_terms *= 2) {
    Real x(Rat(a + n_terms), prec);
    Real sum(prec), t(prec), base(prec);
    for (long n = 0; n < n_terms; ++n) {
      mpfr_set_q(base.get(), Rat(a + n).get_mpq_t(), MPFR_RNDN);
      mpfr_pow_si(t.get(), base.get(), -s, MPFR_RNDN);
      mpfr_add(sum.get(), sum.get(), t.get(), MPFR_RNDN);
    }
    // integral tail and half endpoint term
    mpfr_pow_si(t.get(), x.get(), 1 - s, MPFR_RNDN);
    mpfr_div_si(t.get(), t.get(), s - 1, MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), t.get(), MPFR_RNDN);
    mpfr_pow_si(t.get(), x.get(), -s, MPFR_RNDN);
    mpfr_div_2ui(t.get(), t.get(), 1, MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), t.get(), MPFR_RNDN);

    // power = (s)_{2j-1} x^{1-s-2j}, updated incrementally
    Real power(prec), xinv2(prec);
    mpfr_pow_si(power.get(), x.get(), -s - 1, MPFR_RNDN);
    mpfr_mul_si(power.get(), power.get(), s, MPFR_RNDN);
    mpfr_ui_div(xinv2.get(), 1, x.get(), MPFR_RNDN);
    mpfr_sqr(xinv2.get(), xinv2.get(), MPFR_RNDN);
    Real apow(Rat(1) / a, 64);
    mpfr_pow_ui(apow.get(), apow.get(), static_cast<unsigned long>(s), MPFR_RNDU);
    Bound prev = Bound::infinity();
    for (int j = 1; j <= 4 * ctx.working_digits() + 40; ++j) {
      mpfr_mul_q(t.get(), power.get(), detail::bernoulli_over_factorial(j).get_mpq_t(), MPFR_RNDN);
      Bound term = Bound::abs_of(t);
      if (prev < term) break;  // asymptotic series started to grow: need larger N
      if (term * 2.0 <= goal) {
        // Rounding: about n_terms + 4j operations, each off by a few ulps of a
        // quantity below a^-s + |sum| + 1.
        Bound scale = Bound::abs_of(sum) + Bound::abs_of(apow) + Bound(1.0);
        Bound rnd = scale * Bound(8.0 * static_cast<double>(n_terms + 4 * j + 16)) *
                    Bound::pow2(-static_cast<long>(prec));
        return {sum, term * 2.0 + rnd};
      }
      mpfr_add(sum.get(), sum.get(), t.get(), MPFR_RNDN);
      prev = term;
      // (s)_{2j+1} x^{-s-2j-1} from (s)_{2j-1} x^{1-s-2j}
      mpfr_mul_si(power.get(), power.get(), s + 2 * j - 1, MPFR_RNDN);
      mpfr_mul_si(power.get(), power.get(), s + 2 * j, MPFR_RNDN);
      mpfr_mul(power.get(), power.get(), xinv2.get(), MPFR_RNDN);
    }
    if (n_terms > 64L * (ctx.working_digits() + 16)) break;
  }
  throw NumericError("hurwitz_zeta: Euler-Maclaurin did not converge");
}

inline ApproxR zeta(int s, const Context& ctx) {
  if (s < 2) throw UsageError("zeta: s must be >= 2");
  return hurwitz_zeta(s, Rat(1), ctx);
}

// L(s, chi_-3) = 3^-s (zeta(s,1/3) - zeta(s,2/3)).
inline ApproxR dirichlet_L_chi3(int s, const Context& ctx) {
  if (s < 2) throw UsageError("dirichlet_L_chi3: s must be >= 2");
  Context inner(ctx.precision_digits + 2, ctx.guard_digits);
  ApproxR d = hurwitz_zeta(s, Rat(1, 3), inner) - hurwitz_zeta(s, Rat(2, 3), inner);
  mpz_class three_s;
  mpz_ui_pow_ui(three_s.get_mpz_t(), 3, static_cast<unsigned long>(s));
  return d * Rat(mpz_class(1), three_s);
}

}  // namespace itercurve

#endif
