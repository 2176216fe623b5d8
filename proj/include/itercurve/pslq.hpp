#ifndef ITERCURVE_PSLQ_HPP
#define ITERCURVE_PSLQ_HPP

#include <cmath>
#include <optional>
#include <vector>

#include "real.hpp"

namespace itercurve {

struct PslqOptions {
  double gamma = 2.0 / std::sqrt(3.0);
  long max_iterations = 1000000;
  double threshold_exponent = 0.6;  // relation accepted when |sum r_i x_i| < 10^(-0.6 P)
  double max_norm = 0;              // 0: stop only on detection, precision exhaustion or the iteration cap
};

struct RelationReport {
  std::vector<mpz_class> coeffs;
  ApproxR residual;
  bool confirmed = false;
  double norm_bound = 0;  // no relation of smaller Euclidean norm exists (at the last iteration)
};

struct PslqResult {
  std::optional<RelationReport> relation;
  double norm_bound = 0;
  long iterations = 0;
  bool exhausted = false;  // precision ran out before max_norm was reached
};

namespace detail {

inline Real nint(const Real& x) {
  Real r(x.prec());
  mpfr_round(r.get(), x.get());
  return r;
}

// |sum r_i x_i| with the error bound sum |r_i| err_i plus rounding.
inline ApproxR relation_residual(const std::vector<mpz_class>& r, const std::vector<ApproxR>& xs) {
  mpfr_prec_t prec = xs.front().value.prec();
  for (auto& x : xs) prec = std::max(prec, x.value.prec());
  prec += 64;
  Real s(prec);
  Bound e;
  for (size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) continue;
    Real c(prec);
    mpfr_set_z(c.get(), r[i].get_mpz_t(), MPFR_RNDN);
    Real t = c * xs[i].value;
    s += t;
    e = e + Bound::abs_of(c) * xs[i].err + Bound::ulp_of(t, prec - 2) + Bound::ulp_of(s, prec - 2);
  }
  return {abs(s), e};
}

}  // namespace detail

// Integer relation search (Ferguson-Bailey-Arno PSLQ) on xs, working at the
// context's bit precision.
inline PslqResult pslq(const std::vector<ApproxR>& xs, const Context& ctx, const PslqOptions& opt = {}) {
  const int n = static_cast<int>(xs.size());
  if (n < 2) throw UsageError("pslq: need at least two values");
  for (auto& x : xs)
    if (!(x.err <= ctx.target())) throw UsageError("pslq: input error above 10^-P");
  const mpfr_prec_t prec = ctx.bits();
  const Bound thresh = Bound::pow10(-static_cast<long>(std::floor(opt.threshold_exponent * ctx.precision_digits)));
  PslqResult res;

  auto R = [prec](long v = 0) { return Real(v, prec); };
  std::vector<Real> x(n, R());
  Real norm = R();
  for (int i = 0; i < n; ++i) {
    mpfr_set(x[i].get(), xs[i].value.get(), MPFR_RNDN);
    norm += x[i] * x[i];
  }
  norm = sqrt(norm);
  if (norm.is_zero()) throw UsageError("pslq: all values are zero");
  for (auto& v : x) v /= norm;

  // s_j = sqrt(sum_{k>=j} x_k^2)
  std::vector<Real> s(n, R());
  {
    Real acc = R();
    for (int j = n - 1; j >= 0; --j) {
      acc += x[j] * x[j];
      s[j] = sqrt(acc);
    }
  }
  std::vector<std::vector<Real>> H(n, std::vector<Real>(n - 1, R()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < std::min(i + 1, n - 1); ++j) {
      if (i == j) {
        H[i][j] = s[j + 1] / s[j];
      } else {
        H[i][j] = -(x[i] * x[j]) / (s[j] * s[j + 1]);
      }
    }
  std::vector<Real> y = x;
  std::vector<std::vector<mpz_class>> A(n, std::vector<mpz_class>(n, 0)), B = A;
  for (int i = 0; i < n; ++i) A[i][i] = B[i][i] = 1;

  auto reduce_row = [&](int i, int jmax) {
    for (int j = jmax; j >= 0; --j) {
      if (H[j][j].is_zero()) continue;
      Real t = detail::nint(H[i][j] / H[j][j]);
      if (t.is_zero()) continue;
      mpz_class tz;
      mpfr_get_z(tz.get_mpz_t(), t.get(), MPFR_RNDN);
      y[j] += t * y[i];
      for (int k = 0; k <= j; ++k) H[i][k] -= t * H[j][k];
      for (int k = 0; k < n; ++k) {
        A[i][k] -= tz * A[j][k];
        B[k][j] += tz * B[k][i];
      }
    }
  };
  for (int i = 1; i < n; ++i) reduce_row(i, i - 1);

  const Real gam(opt.gamma, prec);
  const double digits_avail = ctx.working_digits() * 0.95;
  auto column = [&](int j) {
    std::vector<mpz_class> r(n);
    for (int i = 0; i < n; ++i) r[i] = B[i][j];
    return r;
  };
  for (long it = 1; it <= opt.max_iterations; ++it) {
    res.iterations = it;
    int m = 0;
    Real best = R();
    Real g = R(1);
    for (int i = 0; i < n - 1; ++i) {
      g *= gam;
      Real v = g * abs(H[i][i]);
      if (best < v) {
        best = v;
        m = i;
      }
    }
    std::swap(y[m], y[m + 1]);
    std::swap(A[m], A[m + 1]);
    for (int k = 0; k < n; ++k) std::swap(B[k][m], B[k][m + 1]);
    std::swap(H[m], H[m + 1]);
    if (m < n - 2) {
      Real t0 = sqrt(H[m][m] * H[m][m] + H[m][m + 1] * H[m][m + 1]);
      Real t1 = H[m][m] / t0, t2 = H[m][m + 1] / t0;
      for (int i = m; i < n; ++i) {
        Real t3 = H[i][m], t4 = H[i][m + 1];
        H[i][m] = t1 * t3 + t2 * t4;
        H[i][m + 1] = t1 * t4 - t2 * t3;
      }
    }
    for (int i = m + 1; i < n; ++i) reduce_row(i, std::min(i - 1, m + 1));

    Real hmax = R();
    for (int j = 0; j < n - 1; ++j) {
      Real a = abs(H[j][j]);
      if (hmax < a) hmax = a;
    }
    res.norm_bound = hmax.is_zero() ? INFINITY : 1.0 / hmax.to_double();

    // smallest |y_j| gives the candidate relation B[:, j]
    int jmin = 0;
    for (int j = 1; j < n; ++j)
      if (abs(y[j]) < abs(y[jmin])) jmin = j;
    if (Bound::abs_of(y[jmin]) <= thresh) {
      auto r = column(jmin);
      for (auto& c : r)
        if (c != 0) {
          if (c < 0)
            for (auto& d : r) d = -d;
          break;
        }
      ApproxR resid = detail::relation_residual(r, xs);
      if (Bound::abs_of(resid.value) <= thresh) {
        RelationReport rep;
        rep.coeffs = r;
        rep.residual = resid;
        rep.norm_bound = res.norm_bound;
        res.relation = rep;
        return res;
      }
    }
    // precision exhausted once the integer entries need most of the available digits
    double amax = 0;
    for (auto& row : A)
      for (auto& a : row) amax = std::max(amax, static_cast<double>(mpz_sizeinbase(a.get_mpz_t(), 10)));
    if (amax > digits_avail / 2 || hmax.is_zero()) {
      res.exhausted = true;
      return res;
    }
    if (opt.max_norm > 0 && res.norm_bound > opt.max_norm) return res;
  }
  res.exhausted = true;
  return res;
}

}  // namespace itercurve

#endif
