#ifndef ITERCURVE_EXACTFIELD_HPP
#define ITERCURVE_EXACTFIELD_HPP

#include <cctype>
#include <string>
#include <tuple>

#include "real.hpp"

namespace itercurve {

// Element a + b*xi_N of Q(xi_N), N in {4, 6}.
// Reduction rules: xi_4^2 = -1, xi_6^2 = xi_6 - 1.
struct Cyc {
  int level = 4;
  Rat a, b;

  Cyc() = default;
  Cyc(int n, Rat x, Rat y = 0) : level(n), a(std::move(x)), b(std::move(y)) {
    if (n != 4 && n != 6) throw UsageError("Cyc level must be 4 or 6");
    a.canonicalize();
    b.canonicalize();
  }
  static Cyc xi(int n) { return Cyc(n, 0, 1); }
  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }
};

inline void require_same_level(const Cyc& x, const Cyc& y) {
  if (x.level != y.level) throw UsageError("Cyc level mismatch");
}

inline bool operator==(const Cyc& x, const Cyc& y) { return x.level == y.level && x.a == y.a && x.b == y.b; }
inline bool operator!=(const Cyc& x, const Cyc& y) { return !(x == y); }
inline bool operator<(const Cyc& x, const Cyc& y) {
  if (x.level != y.level) return x.level < y.level;
  if (x.a != y.a) return x.a < y.a;
  return x.b < y.b;
}

inline Cyc operator+(const Cyc& x, const Cyc& y) {
  require_same_level(x, y);
  return Cyc(x.level, x.a + y.a, x.b + y.b);
}
inline Cyc operator-(const Cyc& x) { return Cyc(x.level, -x.a, -x.b); }
inline Cyc operator-(const Cyc& x, const Cyc& y) { return x + (-y); }
inline Cyc operator*(const Cyc& x, const Cyc& y) {
  require_same_level(x, y);
  if (x.level == 4) return Cyc(4, x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a);
  Rat bd = x.b * y.b;
  return Cyc(6, x.a * y.a - bd, x.a * y.b + x.b * y.a + bd);
}
inline Cyc operator*(const Cyc& x, const Rat& q) { return Cyc(x.level, x.a * q, x.b * q); }

// xi_N -> xi_N^{-1}: xi_4 -> -xi_4, xi_6 -> 1 - xi_6.
inline Cyc conj(const Cyc& x) {
  if (x.level == 4) return Cyc(4, x.a, -x.b);
  return Cyc(6, x.a + x.b, -x.b);
}

inline Rat cyc_norm(const Cyc& x) {
  if (x.level == 4) return x.a * x.a + x.b * x.b;
  return x.a * x.a + x.a * x.b + x.b * x.b;
}

inline Cyc inv(const Cyc& x) {
  if (x.is_zero()) throw UsageError("Cyc division by zero");
  Rat n = cyc_norm(x);
  Cyc c = conj(x);
  return Cyc(x.level, c.a / n, c.b / n);
}
inline Cyc operator/(const Cyc& x, const Cyc& y) { return x * inv(y); }

inline Cyc cyc_pow(Cyc x, int e) {
  if (e < 0) return cyc_pow(inv(x), -e);
  Cyc r(x.level, 1);
  for (int i = 0; i < e; ++i) r = r * x;
  return r;
}

enum class CycOp { add, mul, inv, conj };

inline Cyc cyc_arith(CycOp op, const Cyc& x, const Cyc* y = nullptr) {
  switch (op) {
    case CycOp::add:
    case CycOp::mul:
      if (!y) throw UsageError("cyc_arith: binary operation needs two operands");
      return op == CycOp::add ? x + *y : x * *y;
    case CycOp::inv:
      return inv(x);
    case CycOp::conj:
      return conj(x);
  }
  throw UsageError("cyc_arith: unknown op");
}

// Regularized weight-one value: exp(I_{dch a,c}(a; b; c)).
inline Cyc tilde_I(const Cyc& a, const Cyc& b, const Cyc& c) {
  require_same_level(a, b);
  require_same_level(b, c);
  bool ab = a == b, bc = b == c;
  if (!ab && !bc) return (c - b) / (a - b);
  if (ab && !bc) return c - b;
  if (!ab && bc) return inv(a - b);
  return Cyc(a.level, 1);
}

namespace detail {
inline bool supported_on(mpz_class n, bool allow3) {
  n = abs(n);
  if (n == 0) return false;
  while (mpz_divisible_ui_p(n.get_mpz_t(), 2)) n /= 2;
  if (allow3)
    while (mpz_divisible_ui_p(n.get_mpz_t(), 3)) n /= 3;
  return n == 1;
}
}  // namespace detail

// Whether x is a unit away from the primes above 2 (curve g) or 2, 3 (curve h).
// x is written as alpha/d with d the common denominator, so alpha has coprime
// integer content relative to d; Z[xi_4] and Z[xi_6] are PIDs, hence the norm
// support of alpha and d decides the ideal support.
inline bool s_unit_check(const Cyc& x, Curve curve) {
  if (x.is_zero()) throw UsageError("s_unit_check: x = 0");
  if (x.level != curve_level(curve)) throw UsageError("s_unit_check: level does not match curve");
  mpz_class d;
  mpz_lcm(d.get_mpz_t(), x.a.get_den_mpz_t(), x.b.get_den_mpz_t());
  Cyc alpha = x * Rat(d);
  Rat na = cyc_norm(alpha);
  bool allow3 = curve == Curve::h;
  return detail::supported_on(na.get_num(), allow3) && detail::supported_on(d, allow3);
}

// Canonical text "a+b*z4" / "a+b*z6" with reduced rationals, e.g. "1/2-3*z6".
inline std::string to_string(const Cyc& x) {
  std::string s = x.a.get_str();
  if (x.b != 0) {
    std::string bs = x.b.get_str();
    s += (x.b < 0 ? "" : "+") + bs + "*z" + std::to_string(x.level);
  }
  return s;
}

// Accepts the canonical form plus shorthands such as "z4", "-z6", "3/2", "1-z4".
inline Cyc parse_cyc(const std::string& text, int default_level = 4) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw UsageError("empty Cyc literal");
  int level = default_level;
  Rat a = 0, b = 0;
  size_t i = 0;
  bool any = false;
  while (i < t.size()) {
    size_t j = i + 1;
    while (j < t.size() && t[j] != '+' && t[j] != '-') ++j;
    std::string tok = t.substr(i, j - i);
    i = j;
    if (tok == "+" || tok == "-") throw UsageError("bad Cyc literal '" + text + "'");
    int sign = 1;
    if (tok[0] == '+') tok.erase(0, 1);
    else if (tok[0] == '-') { sign = -1; tok.erase(0, 1); }
    size_t z = tok.find('z');
    try {
      if (z == std::string::npos) {
        a += sign * Rat(tok);
      } else {
        std::string coef = tok.substr(0, z);
        std::string lv = tok.substr(z + 1);
        if (lv != "4" && lv != "6") throw UsageError("bad Cyc level in '" + text + "'");
        level = std::stoi(lv);
        if (!coef.empty()) {
          if (coef.back() != '*') throw UsageError("bad Cyc literal '" + text + "'");
          coef.pop_back();
        }
        b += sign * (coef.empty() ? Rat(1) : Rat(coef));
      }
    } catch (const std::invalid_argument&) {
      throw UsageError("bad Cyc literal '" + text + "'");
    }
    any = true;
  }
  if (!any) throw UsageError("bad Cyc literal '" + text + "'");
  return Cyc(level, a, b);
}

// Numeric embedding with xi_N = exp(2 pi i / N).
inline ApproxC embed(const Cyc& x, mpfr_prec_t prec) {
  ApproxR a = ApproxR::from_rat(x.a, prec);
  if (x.level == 4) return {a.value, Real(x.b, prec), a.err + Bound::ulp_of(Real(x.b, prec), prec - 1)};
  // xi_6 = 1/2 + i sqrt(3)/2
  Real re(Rat(x.a + x.b / 2), prec);
  Real s3(3L, prec);
  mpfr_sqrt(s3.get(), s3.get(), MPFR_RNDN);
  Real im = s3 * Rat(x.b / 2);
  Bound e = Bound::ulp_of(re, prec - 1) + Bound::ulp_of(im, prec - 3);
  return {re, im, e};
}

// Exact squared modulus |x|^2 (the norm is x times its complex conjugate).
inline Rat abs2(const Cyc& x) { return cyc_norm(x); }

}  // namespace itercurve

#endif
