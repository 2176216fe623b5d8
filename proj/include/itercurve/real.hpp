#ifndef ITERCURVE_REAL_HPP
#define ITERCURVE_REAL_HPP

#include <mpfr.h>
#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <ostream>
#include <string>
#include <utility>

#include "common.hpp"

namespace itercurve {

using Rat = mpq_class;

// RAII wrapper around mpfr_t. Arithmetic rounds to nearest at the larger
// operand precision.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 64) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(double x, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  Real(long x, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  Real(const Rat& q, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  Real(const std::string& s, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0 && !mpfr_number_p(v_))
      throw UsageError("bad real literal '" + s + "'");
    if (mpfr_nan_p(v_)) throw UsageError("bad real literal '" + s + "'");
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      if (mpfr_get_prec(v_) != mpfr_get_prec(o.v_)) mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  // Exponent e with 2^(e-1) <= |x| < 2^e; very negative for zero.
  long exponent() const { return is_zero() ? -(1L << 40) : static_cast<long>(mpfr_get_exp(v_)); }

  // Scientific notation with `digits` significant digits.
  std::string to_string(int digits) const {
    if (mpfr_zero_p(v_)) return "0";
    if (!mpfr_number_p(v_)) return mpfr_nan_p(v_) ? "nan" : (mpfr_sgn(v_) > 0 ? "inf" : "-inf");
    std::unique_ptr<char[]> buf(new char[digits + 64]);
    mpfr_snprintf(buf.get(), digits + 64, "%.*Re", std::max(digits - 1, 0), v_);
    return buf.get();
  }
  // Fixed notation with `decimals` digits after the point.
  std::string to_fixed(int decimals) const {
    int len = mpfr_snprintf(nullptr, 0, "%.*Rf", decimals, v_);
    std::string s(static_cast<size_t>(len) + 1, '\0');
    mpfr_snprintf(s.data(), s.size(), "%.*Rf", decimals, v_);
    s.resize(static_cast<size_t>(len));
    return s;
  }

  Real& operator+=(const Real& o) { return op2(o, mpfr_add); }
  Real& operator-=(const Real& o) { return op2(o, mpfr_sub); }
  Real& operator*=(const Real& o) { return op2(o, mpfr_mul); }
  Real& operator/=(const Real& o) { return op2(o, mpfr_div); }

 private:
  template <class F>
  Real& op2(const Real& o, F f) {
    if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
    f(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  mpfr_t v_;
};

inline Real operator+(Real a, const Real& b) { return a += b; }
inline Real operator-(Real a, const Real& b) { return a -= b; }
inline Real operator*(Real a, const Real& b) { return a *= b; }
inline Real operator/(Real a, const Real& b) { return a /= b; }
inline Real operator-(Real a) {
  mpfr_neg(a.get(), a.get(), MPFR_RNDN);
  return a;
}
inline Real operator*(Real a, const Rat& q) {
  mpfr_mul_q(a.get(), a.get(), q.get_mpq_t(), MPFR_RNDN);
  return a;
}
inline Real operator*(Real a, long k) {
  mpfr_mul_si(a.get(), a.get(), k, MPFR_RNDN);
  return a;
}
inline bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }

inline Real abs(Real a) {
  mpfr_abs(a.get(), a.get(), MPFR_RNDN);
  return a;
}
inline Real sqrt(Real a) {
  mpfr_sqrt(a.get(), a.get(), MPFR_RNDN);
  return a;
}
inline Real log(Real a) {
  mpfr_log(a.get(), a.get(), MPFR_RNDN);
  return a;
}
inline Real pow_si(Real a, long e) {
  mpfr_pow_si(a.get(), a.get(), e, MPFR_RNDN);
  return a;
}
inline Real ldexp(Real a, long e) {
  mpfr_mul_2si(a.get(), a.get(), e, MPFR_RNDN);
  return a;
}

// A non-negative upper bound. Every operation rounds upward, so a Bound
// never under-reports the quantity it majorizes.
class Bound {
 public:
  static constexpr mpfr_prec_t kPrec = 64;
  Bound() : r_(kPrec) {}
  explicit Bound(double x) : r_(kPrec) {
    if (!(x >= 0)) throw NumericError("negative or NaN error bound");
    mpfr_set_d(r_.get(), x, MPFR_RNDU);
  }
  static Bound infinity() {
    Bound b;
    mpfr_set_inf(b.r_.get(), 1);
    return b;
  }
  static Bound pow2(long e) {
    Bound b;
    mpfr_set_ui_2exp(b.r_.get(), 1, e, MPFR_RNDU);
    return b;
  }
  static Bound pow10(long e) {
    Bound b;
    mpfr_set_si(b.r_.get(), e, MPFR_RNDN);
    mpfr_exp10(b.r_.get(), b.r_.get(), MPFR_RNDU);
    return b;
  }
  // |x| rounded up.
  static Bound abs_of(const Real& x) {
    Bound b;
    mpfr_abs(b.r_.get(), x.get(), MPFR_RNDU);
    return b;
  }
  // |x| * 2^-prec, i.e. a majorant of one rounding error on x at precision prec.
  static Bound ulp_of(const Real& x, mpfr_prec_t prec) {
    if (x.is_zero()) return Bound();
    return pow2(x.exponent() - static_cast<long>(prec));
  }
  // Upper bound for |x - y|.
  static Bound dist(const Real& x, const Real& y) {
    Real d(std::max(x.prec(), y.prec()) + 2);
    mpfr_sub(d.get(), x.get(), y.get(), MPFR_RNDN);
    Bound b = abs_of(d);
    return b + ulp_of(d, d.prec() - 1);
  }

  Bound& operator+=(const Bound& o) {
    mpfr_add(r_.get(), r_.get(), o.r_.get(), MPFR_RNDU);
    return *this;
  }
  Bound& operator*=(const Bound& o) {
    mpfr_mul(r_.get(), r_.get(), o.r_.get(), MPFR_RNDU);
    return *this;
  }
  Bound& operator*=(double k) { return *this *= Bound(k); }
  friend Bound operator+(Bound a, const Bound& b) { return a += b; }
  friend Bound operator*(Bound a, const Bound& b) { return a *= b; }
  friend Bound operator*(Bound a, double k) { return a *= k; }
  friend bool operator<=(const Bound& a, const Bound& b) { return mpfr_lessequal_p(a.r_.get(), b.r_.get()) != 0; }
  friend bool operator<(const Bound& a, const Bound& b) { return mpfr_less_p(a.r_.get(), b.r_.get()) != 0; }
  friend Bound max(const Bound& a, const Bound& b) { return a < b ? b : a; }

  double to_double() const { return mpfr_get_d(r_.get(), MPFR_RNDU); }
  // log10 of the bound, or a large negative number for zero.
  double log10() const {
    if (mpfr_zero_p(r_.get())) return -1e9;
    long e;
    double m = mpfr_get_d_2exp(&e, r_.get(), MPFR_RNDU);
    return std::log10(m) + static_cast<double>(e) * std::log10(2.0);
  }
  bool is_finite() const { return mpfr_number_p(r_.get()) != 0; }
  const Real& real() const { return r_; }
  std::string to_string() const {
    if (mpfr_zero_p(r_.get())) return "0";
    char buf[64];
    mpfr_snprintf(buf, sizeof buf, "%.3RUe", r_.get());
    return buf;
  }

 private:
  Real r_;
};

// Working precision in decimal digits plus guard digits.
struct Context {
  int precision_digits = 30;
  int guard_digits = 10;

  Context() = default;
  explicit Context(int p, int guard = 10) : precision_digits(p), guard_digits(guard) {
    if (p < 10) throw UsageError("precision_digits must be >= 10");
    if (guard < 0) throw UsageError("guard_digits must be >= 0");
  }
  int working_digits() const { return precision_digits + guard_digits; }
  mpfr_prec_t bits() const {
    return static_cast<mpfr_prec_t>(std::ceil(working_digits() * 3.3219280948873623)) + 16;
  }
  // 10^-precision_digits, the accuracy every result must meet.
  Bound target() const { return Bound::pow10(-precision_digits); }
  // 10^-(precision_digits+guard_digits), the internal truncation goal.
  Bound internal_target() const { return Bound::pow10(-working_digits()); }
  Context doubled() const { return Context(2 * precision_digits, guard_digits); }
};

struct ApproxR {
  Real value;
  Bound err;

  ApproxR() = default;
  ApproxR(Real v, Bound e) : value(std::move(v)), err(std::move(e)) {}
  // Exact rational, rounded at prec.
  static ApproxR from_rat(const Rat& q, mpfr_prec_t prec) {
    Real v(q, prec);
    return {v, Bound::ulp_of(v, prec - 1)};
  }
  double to_double() const { return value.to_double(); }
  // Upper bound of |value| + err.
  Bound magnitude() const { return Bound::abs_of(value) + err; }
  std::string to_string(int digits) const { return value.to_string(digits) + " +- " + err.to_string(); }
};

inline ApproxR operator+(const ApproxR& x, const ApproxR& y) {
  Real v = x.value + y.value;
  return {v, x.err + y.err + Bound::ulp_of(v, v.prec() - 1)};
}
inline ApproxR operator-(const ApproxR& x) { return {-x.value, x.err}; }
inline ApproxR operator-(const ApproxR& x, const ApproxR& y) { return x + (-y); }
inline ApproxR operator*(const ApproxR& x, const ApproxR& y) {
  Real v = x.value * y.value;
  Bound e = Bound::abs_of(x.value) * y.err + Bound::abs_of(y.value) * x.err + x.err * y.err;
  return {v, e + Bound::ulp_of(v, v.prec() - 1)};
}
inline ApproxR operator*(const ApproxR& x, const Rat& q) {
  Real v = x.value * q;
  Bound aq = Bound::abs_of(Real(abs(q), 64)) * Bound(1.0 + 1e-15);
  return {v, x.err * aq + Bound::ulp_of(v, v.prec() - 2)};
}
inline ApproxR inverse(const ApproxR& x) {
  // lo = |x| - err, rounded down; must stay positive.
  Real lo(x.value.prec());
  mpfr_abs(lo.get(), x.value.get(), MPFR_RNDD);
  mpfr_sub(lo.get(), lo.get(), x.err.real().get(), MPFR_RNDD);
  if (lo.sign() <= 0) throw NumericError("inverse of a ball containing zero");
  Real v = Real(1L, x.value.prec()) / x.value;
  // |1/x - 1/y| <= err / (|x| (|x| - err)) <= err / lo^2
  Real t(64);
  mpfr_mul(t.get(), lo.get(), lo.get(), MPFR_RNDD);
  mpfr_ui_div(t.get(), 1, t.get(), MPFR_RNDU);
  return {v, x.err * Bound::abs_of(t) + Bound::ulp_of(v, v.prec() - 1)};
}
inline ApproxR operator/(const ApproxR& x, const ApproxR& y) { return x * inverse(y); }

inline ApproxR pow(const ApproxR& x, int e) {
  if (e < 0) return pow(inverse(x), -e);
  ApproxR r = ApproxR::from_rat(1, x.value.prec());
  for (int i = 0; i < e; ++i) r = r * x;
  return r;
}

// True when the balls overlap, i.e. the two values could be equal.
inline bool overlaps(const ApproxR& x, const ApproxR& y, const Bound& slack = Bound()) {
  return Bound::dist(x.value, y.value) <= x.err + y.err + slack;
}

struct ApproxC {
  Real re, im;
  Bound err;  // bound on the complex modulus of the error

  ApproxC() = default;
  ApproxC(Real r, Real i, Bound e) : re(std::move(r)), im(std::move(i)), err(std::move(e)) {}
  explicit ApproxC(const ApproxR& x) : re(x.value), im(x.value.prec()), err(x.err) {}
  static ApproxC zero(mpfr_prec_t prec) { return {Real(prec), Real(prec), Bound()}; }
  static ApproxC from_rat(const Rat& q, mpfr_prec_t prec) { return ApproxC(ApproxR::from_rat(q, prec)); }
  mpfr_prec_t prec() const { return re.prec(); }
  // |re| + |im|, an upper bound of the modulus of the midpoint.
  Bound mid_l1() const { return Bound::abs_of(re) + Bound::abs_of(im); }
  Bound magnitude() const { return mid_l1() + err; }
  ApproxR real_part() const { return {re, err}; }
  ApproxR imag_part() const { return {im, err}; }
  std::string to_string(int digits) const {
    return "(" + re.to_string(digits) + ") + i(" + im.to_string(digits) + ") +- " + err.to_string();
  }
};

inline ApproxC operator+(const ApproxC& x, const ApproxC& y) {
  Real r = x.re + y.re, i = x.im + y.im;
  return {r, i, x.err + y.err + Bound::ulp_of(r, r.prec() - 1) + Bound::ulp_of(i, i.prec() - 1)};
}
inline ApproxC operator-(const ApproxC& x) { return {-x.re, -x.im, x.err}; }
inline ApproxC operator-(const ApproxC& x, const ApproxC& y) { return x + (-y); }
inline ApproxC operator*(const ApproxC& x, const ApproxC& y) {
  Real r = x.re * y.re - x.im * y.im;
  Real i = x.re * y.im + x.im * y.re;
  Bound mx = x.mid_l1(), my = y.mid_l1();
  Bound e = mx * y.err + my * x.err + x.err * y.err;
  // four products and two sums, each rounded once
  Bound rnd = mx * my * Bound::pow2(3 - static_cast<long>(std::min(r.prec(), i.prec())));
  return {r, i, e + rnd};
}
inline ApproxC operator*(const ApproxC& x, const Rat& q) {
  Real r = x.re * q, i = x.im * q;
  Bound aq = Bound::abs_of(Real(abs(q), 64)) * Bound(1.0 + 1e-15);
  return {r, i, x.err * aq + Bound::ulp_of(r, r.prec() - 2) + Bound::ulp_of(i, i.prec() - 2)};
}
inline ApproxC operator*(const ApproxC& x, const ApproxR& y) { return x * ApproxC(y); }
inline ApproxC conj(const ApproxC& x) { return {x.re, -x.im, x.err}; }

// Upper bound on |x - y| including both radii.
inline Bound residual(const ApproxR& x, const ApproxR& y) { return Bound::dist(x.value, y.value) + x.err + y.err; }
inline Bound residual(const ApproxC& x, const ApproxC& y) {
  return Bound::dist(x.re, y.re) + Bound::dist(x.im, y.im) + x.err + y.err;
}

}  // namespace itercurve

#endif
