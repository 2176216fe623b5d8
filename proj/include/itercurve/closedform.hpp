#ifndef ITERCURVE_CLOSEDFORM_HPP
#define ITERCURVE_CLOSEDFORM_HPP

#include <map>
#include <string>
#include <tuple>

#include "numkernel.hpp"

namespace itercurve {

// pi^a log2^b log3^c sqrt3^e prod zeta(s)^.. prod L(s, chi_-3)^..  with e in {0, 1}.
struct Monomial {
  int pi = 0, log2 = 0, log3 = 0, sqrt3 = 0;
  std::map<int, int> zeta;  // s -> exponent
  std::map<int, int> lchi;  // s -> exponent

  int weight() const {
    int w = pi + log2 + log3;
    for (auto& [s, e] : zeta) w += s * e;
    for (auto& [s, e] : lchi) w += s * e;
    return w;
  }
  auto key() const { return std::tie(pi, log2, log3, sqrt3, zeta, lchi); }
};
inline bool operator<(const Monomial& a, const Monomial& b) { return a.key() < b.key(); }
inline bool operator==(const Monomial& a, const Monomial& b) { return a.key() == b.key(); }

// Exact Q-linear combination of monomials.
class ClosedForm {
 public:
  std::map<Monomial, Rat> terms;

  void add(const Monomial& m, const Rat& q) {
    if (q == 0) return;
    auto [it, inserted] = terms.emplace(m, q);
    if (!inserted) {
      it->second += q;
      if (it->second == 0) terms.erase(it);
    }
  }
  // coef * pi^pi_exp * sqrt3^s3_exp with s3_exp any integer (normalized to 0/1).
  void add_term(Rat coef, int pi_exp, int s3_exp, int log2 = 0, int log3 = 0, int zeta_s = 0, int lchi_s = 0) {
    int q = s3_exp >= 0 ? s3_exp / 2 : -((-s3_exp + 1) / 2);
    int r = s3_exp - 2 * q;
    mpz_class p3;
    mpz_ui_pow_ui(p3.get_mpz_t(), 3, static_cast<unsigned long>(q >= 0 ? q : -q));
    coef = q >= 0 ? Rat(coef * p3) : Rat(coef / p3);
    Monomial m;
    m.pi = pi_exp;
    m.sqrt3 = r;
    m.log2 = log2;
    m.log3 = log3;
    if (zeta_s) m.zeta[zeta_s] = 1;
    if (lchi_s) m.lchi[lchi_s] = 1;
    add(m, coef);
  }

  Rat coefficient(const Monomial& m) const {
    auto it = terms.find(m);
    return it == terms.end() ? Rat(0) : it->second;
  }
  bool has_log2() const {
    for (auto& [m, q] : terms)
      if (m.log2 > 0) return true;
    return false;
  }
  bool is_homogeneous(int k) const {
    for (auto& [m, q] : terms)
      if (m.weight() != k) return false;
    return true;
  }
  std::string to_string() const {
    if (terms.empty()) return "0";
    std::string s;
    for (auto& [m, q] : terms) {
      std::string t = q.get_str();
      auto fac = [&t](const std::string& name, int e) {
        if (e == 1) t += "*" + name;
        else if (e > 1) t += "*" + name + "^" + std::to_string(e);
      };
      fac("pi", m.pi);
      fac("log2", m.log2);
      fac("log3", m.log3);
      fac("sqrt3", m.sqrt3);
      for (auto& [z, e] : m.zeta) fac("zeta(" + std::to_string(z) + ")", e);
      for (auto& [z, e] : m.lchi) fac("L(" + std::to_string(z) + ",chi_-3)", e);
      s += (s.empty() ? "" : " + ") + t;
    }
    return s;
  }
};

inline ClosedForm operator+(ClosedForm a, const ClosedForm& b) {
  for (auto& [m, q] : b.terms) a.add(m, q);
  return a;
}
inline ClosedForm operator*(ClosedForm a, const Rat& q) {
  ClosedForm out;
  for (auto& [m, c] : a.terms) out.add(m, c * q);
  return out;
}
inline ClosedForm operator-(const ClosedForm& a, const ClosedForm& b) { return a + b * Rat(-1); }
inline ClosedForm operator*(const ClosedForm& a, const ClosedForm& b) {
  ClosedForm out;
  for (auto& [m1, q1] : a.terms)
    for (auto& [m2, q2] : b.terms) {
      Monomial m = m1;
      m.pi += m2.pi;
      m.log2 += m2.log2;
      m.log3 += m2.log3;
      Rat q = q1 * q2;
      m.sqrt3 += m2.sqrt3;
      if (m.sqrt3 == 2) {
        m.sqrt3 = 0;
        q *= 3;
      }
      for (auto& [s, e] : m2.zeta) m.zeta[s] += e;
      for (auto& [s, e] : m2.lchi) m.lchi[s] += e;
      out.add(m, q);
    }
  return out;
}

inline ApproxR evaluate(const ClosedForm& cf, const Context& ctx) {
  Context inner(ctx.precision_digits + 5, ctx.guard_digits);
  mpfr_prec_t prec = inner.bits();
  ApproxR total = ApproxR::from_rat(0, prec);
  std::map<std::string, ApproxR> memo;
  auto get = [&](const std::string& key, auto make) -> const ApproxR& {
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, make()).first;
    return it->second;
  };
  for (auto& [m, q] : cf.terms) {
    ApproxR v = ApproxR::from_rat(1, prec);
    auto mulpow = [&](const ApproxR& base, int e) {
      for (int i = 0; i < e; ++i) v = v * base;
    };
    mulpow(get("pi", [&] { return const_eval("pi", inner); }), m.pi);
    mulpow(get("log2", [&] { return const_eval("log2", inner); }), m.log2);
    mulpow(get("log3", [&] { return const_eval("log3", inner); }), m.log3);
    if (m.sqrt3) {
      mulpow(get("sqrt3",
                 [&] {
                   Real s(3L, prec);
                   mpfr_sqrt(s.get(), s.get(), MPFR_RNDN);
                   return ApproxR{s, Bound::ulp_of(s, prec - 1)};
                 }),
             m.sqrt3);
    }
    for (auto& [s, e] : m.zeta) mulpow(get("z" + std::to_string(s), [&] { return zeta(s, inner); }), e);
    for (auto& [s, e] : m.lchi) mulpow(get("L" + std::to_string(s), [&] { return dirichlet_L_chi3(s, inner); }), e);
    total = total + v * q;
  }
  return total;
}

namespace closed {

inline Rat factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(f);
}
inline Rat pow2(int e) {
  mpz_class p = mpz_class(1) << (e >= 0 ? e : -e);
  return e >= 0 ? Rat(p) : Rat(mpz_class(1), p);
}
inline Rat pow3(int e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(e >= 0 ? e : -e));
  return e >= 0 ? Rat(p) : Rat(mpz_class(1), p);
}
// (-1)^e for any integer e
inline int sgn_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

// I_g(w2^{k-1} w0), k >= 2.
inline ClosedForm g_trailing(int k) {
  ClosedForm cf;
  for (int j = 3; j <= k; j += 2)
    cf.add_term(-Rat(sgn_pow((1 - j) / 2)) / factorial(k - j) * pow2(-(k - j)) * pow2(1 - j) * (pow2(1 - j) - 1),
                k - j, 0, 0, 0, j);
  cf.add_term(Rat(1) / factorial(k - 1) * pow2(-(k - 1)), k - 1, 0, 1);
  if (k % 2 == 1) cf.add_term(Rat(sgn_pow((1 - k) / 2)) * pow2(1 - k), 0, 0, 0, 0, k);
  return cf;
}

// I_h(w4^{k-1} w0), k >= 2 (real part of the polylog expansion).
inline ClosedForm h_trailing(int k) {
  ClosedForm cf;
  // (1/sqrt3^{k-1}) (1/(k-1)!) (pi/3)^{k-1} (1/2) log3
  cf.add_term(Rat(1, 2) / factorial(k - 1) * pow3(-(k - 1)), k - 1, -(k - 1), 0, 1);
  if (k % 2 == 1) cf.add_term(Rat(sgn_pow((1 - k) / 2)) * pow2(1 - k), 0, -(k - 1), 0, 0, k);
  for (int j = 2; j <= k; j += 2)
    cf.add_term(Rat(sgn_pow((2 - j) / 2)) / factorial(k - j) * pow3(-(k - j)) * pow2(-j), k - j, -(k - 2), 0, 0, 0, j);
  for (int j = 3; j <= k; j += 2)
    cf.add_term(-Rat(sgn_pow((1 - j) / 2)) / factorial(k - j) * pow3(-(k - j)) * pow2(-j) * (pow3(1 - j) - 1), k - j,
                -(k - 1), 0, 0, j);
  return cf;
}

// I_g(w2^{2m-1} w0), m >= 2, in the form stated for even weight.
inline ClosedForm g_even_weight(int m) {
  ClosedForm cf;
  for (int l = 1; l <= m - 1; ++l)
    cf.add_term(-pow2(1 - 2 * m) * sgn_pow(l) / factorial(2 * m - 2 * l - 1) * (pow2(-2 * l) - 1),
                2 * m - 2 * l - 1, 0, 0, 0, 2 * l + 1);
  cf.add_term(Rat(1) / factorial(2 * m - 1) * pow2(-(2 * m - 1)), 2 * m - 1, 0, 1);
  return cf;
}

// I_g(w2^{2m} w0), m >= 1, in the form stated for odd weight.
inline ClosedForm g_odd_weight(int m) {
  ClosedForm cf;
  for (int l = 1; l <= m - 1; ++l)
    cf.add_term(-pow2(-2 * m) * sgn_pow(l) / factorial(2 * m - 2 * l) * (pow2(-2 * l) - 1), 2 * m - 2 * l, 0, 0, 0,
                2 * l + 1);
  cf.add_term(Rat(sgn_pow(m)) * pow2(-2 * m) * (2 - pow2(-2 * m)), 0, 0, 0, 0, 2 * m + 1);
  cf.add_term(Rat(1) / factorial(2 * m) * pow2(-2 * m), 2 * m, 0, 1);
  return cf;
}

// I_h(w4^{2m-1} w0), m >= 2. With `as_printed` the log3 term uses
// (pi/sqrt3)^{2m-1} instead of (pi/3)^{2m-1}; that variant does not match
// the integral and is kept only to report the discrepancy.
inline ClosedForm h_even_weight(int m, bool as_printed = false) {
  ClosedForm cf;
  int k1 = 2 * m - 1;
  if (as_printed)
    cf.add_term(Rat(1, 2) / factorial(k1), k1, -k1 - k1, 0, 1);
  else
    cf.add_term(Rat(1, 2) / factorial(k1) * pow3(-k1), k1, -k1, 0, 1);
  for (int l = 1; l <= m; ++l)
    cf.add_term(pow3(-k1) * sgn_pow(1 - l) / factorial(2 * m - 2 * l) * pow3(l) * pow2(-2 * l), 2 * m - 2 * l,
                -(2 * m - 2 * l), 0, 0, 0, 2 * l);
  for (int l = 1; l <= m - 1; ++l)
    cf.add_term(-pow3(-k1) * sgn_pow(-l) / factorial(2 * m - 2 * l - 1) * pow3(l) * pow2(-2 * l - 1) * (pow3(-2 * l) - 1),
                2 * m - 2 * l - 1, -(2 * m - 2 * l - 1), 0, 0, 2 * l + 1);
  return cf;
}

// I_h(w4^{2m} w0), m >= 1.
inline ClosedForm h_odd_weight(int m) {
  ClosedForm cf;
  cf.add_term(pow3(-m) / factorial(2 * m) * pow3(-2 * m) * Rat(1, 2), 2 * m, 0, 0, 1);
  mpz_class twelve_m;
  mpz_ui_pow_ui(twelve_m.get_mpz_t(), 12, static_cast<unsigned long>(m));
  cf.add_term(Rat(sgn_pow(m)) / Rat(twelve_m), 0, 0, 0, 0, 2 * m + 1);
  for (int l = 1; l <= m; ++l)
    cf.add_term(pow3(-2 * m) * sgn_pow(1 - l) / factorial(2 * m - 2 * l + 1) * pow3(l) * pow2(-2 * l),
                2 * m - 2 * l + 1, -(2 * m - 2 * l + 1), 0, 0, 0, 2 * l);
  for (int l = 1; l <= m; ++l)
    cf.add_term(-pow3(-2 * m) * sgn_pow(-l) / factorial(2 * m - 2 * l) * pow3(l) * pow2(-2 * l - 1) * (pow3(-2 * l) - 1),
                2 * m - 2 * l, -(2 * m - 2 * l), 0, 0, 2 * l + 1);
  return cf;
}

// I_g(w2) = pi/2, I_h(w4) = pi/(3 sqrt3).
inline ClosedForm phi_value(Curve c) {
  ClosedForm cf;
  if (c == Curve::g) cf.add_term(Rat(1, 2), 1, 0);
  else cf.add_term(Rat(1, 3), 1, -1);
  return cf;
}

inline ClosedForm special_rec(Curve c, int j, int k, std::map<std::pair<int, int>, ClosedForm>& memo) {
  auto key = std::make_pair(j, k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  ClosedForm out;
  if (j == k - 1) {
    out = c == Curve::g ? g_trailing(k) : h_trailing(k);
  } else {
    // phi^j eta phi^{r-1} sh phi = (j+1) phi^{j+1} eta phi^{r-1} + r phi^j eta phi^r, r = k-j-1
    int r = k - j - 1;
    out = (special_rec(c, j, k - 1, memo) * phi_value(c) - special_rec(c, j + 1, k, memo) * Rat(j + 1)) * Rat(1, r);
  }
  memo[key] = out;
  return out;
}

}  // namespace closed

// Closed form of I_f(phi^j w0 phi^{k-j-1}), phi = w2 (g) or w4 (h); 1 <= j <= k-1.
inline ClosedForm closed_form_special(Curve curve, int j, int k) {
  if (k < 2 || j < 1 || j > k - 1)
    throw UsageError("closed_form_special: need k >= 2 and 1 <= j <= k-1 (j = 0 is not admissible)");
  std::map<std::pair<int, int>, ClosedForm> memo;
  return closed::special_rec(curve, j, k, memo);
}

}  // namespace itercurve

#endif
