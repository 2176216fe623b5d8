#ifndef ITERCURVE_EVAL_HPP
#define ITERCURVE_EVAL_HPP

#include <fftw3.h>

#include <Eigen/Dense>
#include <algorithm>

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "descent.hpp"
#include "numkernel.hpp"

namespace itercurve {

// ---------------------------------------------------------------------------
// Coefficients c(n, w_s) of w_s = sum_n c(n, w_s) x^{n-1} dx.

inline mpz_class central_binomial(long m) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(2 * m), static_cast<unsigned long>(m));
  return r;
}

inline Rat coeff_c(long n, const CurveLetter& l) {
  if (n < 0) throw UsageError("coeff_c: n must be >= 0");
  auto pow_rat = [](long num, long den, long e) {
    mpz_class a, b;
    mpz_ui_pow_ui(a.get_mpz_t(), static_cast<unsigned long>(num), static_cast<unsigned long>(e));
    mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(den), static_cast<unsigned long>(e));
    Rat q(a, b);
    q.canonicalize();
    return q;
  };
  switch (l.index) {
    case 0:
      return n == 0 ? 1 : 0;
    case 1:
      return n == 0 ? 0 : 1;
    case 2:  // 2^{1-n} C(n-1, (n-1)/2), n odd
      return n % 2 == 1 ? Rat(central_binomial((n - 1) / 2)) * pow_rat(1, 4, (n - 1) / 2) : Rat(0);
    case 3:  // 2^{-n} C(n, n/2), n even
      return n % 2 == 0 ? Rat(central_binomial(n / 2)) * pow_rat(1, 4, n / 2) : Rat(0);
    case 4:  // (1/2)(3/16)^m C(2m,m), n = 2m+1
      return n % 2 == 1 ? Rat(central_binomial((n - 1) / 2)) * pow_rat(3, 16, (n - 1) / 2) / 2 : Rat(0);
    case 5:  // (1/2)(3/16)^m C(2m,m), n = 2m
      return n % 2 == 0 ? Rat(central_binomial(n / 2)) * pow_rat(3, 16, n / 2) / 2 : Rat(0);
    case 6: {
      Rat s = 0;
      for (long m = 0; 2 * m <= n - 1; ++m) s += Rat(central_binomial(m)) * pow_rat(3, 16, m);
      return s / 2;
    }
  }
  throw UsageError("coeff_c: bad letter");
}

// ---------------------------------------------------------------------------
// Value cache for P1 words, keyed by (letters, level, working bits).

class ValueCache {
 public:
  static ValueCache& global() {
    static ValueCache cache;
    return cache;
  }
  std::optional<ApproxC> get(const std::string& key) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void put(const std::string& key, const ApproxC& v) {
    std::unique_lock lock(mu_);
    map_.insert_or_assign(key, v);
  }
  std::vector<std::pair<std::string, ApproxC>> entries() const {
    std::shared_lock lock(mu_);
    return {map_.begin(), map_.end()};
  }
  size_t size() const {
    std::shared_lock lock(mu_);
    return map_.size();
  }
  void clear() {
    std::unique_lock lock(mu_);
    map_.clear();
  }
  bool enabled() const { return enabled_; }
  void set_enabled(bool on) { enabled_ = on; }

 private:
  mutable std::shared_mutex mu_;
  std::map<std::string, ApproxC> map_;
  bool enabled_ = true;
};

inline std::string p1_cache_key(const P1Word& w, int level, mpfr_prec_t bits) {
  return "L" + std::to_string(level) + ":" + p1_word_key(w) + "@" + std::to_string(bits);
}

// ---------------------------------------------------------------------------
// Series for I(0; a_1..a_m; 1/2).

namespace detail {

struct CNum {
  Real re, im;
  explicit CNum(mpfr_prec_t p) : re(p), im(p) {}
};

// out = r * t, with r's zero components skipped. out must not alias t.
inline void cmul(CNum& out, const CNum& r, const CNum& t, bool r_re_zero, bool r_im_zero, Real& tmp) {
  if (r_im_zero) {
    mpfr_mul(out.re.get(), r.re.get(), t.re.get(), MPFR_RNDN);
    mpfr_mul(out.im.get(), r.re.get(), t.im.get(), MPFR_RNDN);
  } else if (r_re_zero) {
    mpfr_mul(out.re.get(), r.im.get(), t.im.get(), MPFR_RNDN);
    mpfr_neg(out.re.get(), out.re.get(), MPFR_RNDN);
    mpfr_mul(out.im.get(), r.im.get(), t.re.get(), MPFR_RNDN);
  } else {
    mpfr_mul(out.re.get(), r.re.get(), t.re.get(), MPFR_RNDN);
    mpfr_mul(tmp.get(), r.im.get(), t.im.get(), MPFR_RNDN);
    mpfr_sub(out.re.get(), out.re.get(), tmp.get(), MPFR_RNDN);
    mpfr_mul(out.im.get(), r.re.get(), t.im.get(), MPFR_RNDN);
    mpfr_mul(tmp.get(), r.im.get(), t.re.get(), MPFR_RNDN);
    mpfr_add(out.im.get(), out.im.get(), tmp.get(), MPFR_RNDN);
  }
}

// log of t_n = C(n+m-1, m-1) 2^-n, the majorant of |A_m(n)| (1/2)^n.
inline double log_term_bound(long n, int m) {
  return std::lgamma(static_cast<double>(n + m)) - std::lgamma(static_cast<double>(m)) -
         std::lgamma(static_cast<double>(n + 1)) - static_cast<double>(n) * std::log(2.0);
}

inline void check_letter(const P1Letter& a) {
  Rat n = abs2(a);
  if (n != 0 && n < 1) throw UsageError("P1 letter " + p1_letter_name(a) + " has modulus below 1");
}

// Prefix values I(0; a_1..a_j; 1/2) for j = 0..m.
//
// With r_j = 1/(2 a_j), the scaled coefficients A_j(n) = [x^n] I(0;a_1..a_j;x) 2^-n obey
//   B_j(n) = r_j (B_j(n-1) + A_{j-1}(n-1)),  A_j(n) = -B_j(n)/n   (a_j != 0)
//   A_j(n) = A_{j-1}(n)/n                                          (a_j == 0)
// and I(0; a_1..a_j; 1/2) = sum_{n>=1} A_j(n). Because |r_j| <= 1/2 and 1/n <= 1,
// induction on j gives |A_j(n)| <= t_n = C(n+j-1, j-1) 2^-n. For n > N >= 2m the
// ratio t_{n+1}/t_n <= 3/4, so the tail is at most 4 t_{N+1}.
inline std::vector<ApproxC> half_prefixes(const P1Word& w, const Context& ctx) {
  const int m = static_cast<int>(w.size());
  const mpfr_prec_t out_prec = ctx.bits();
  std::vector<ApproxC> out;
  out.push_back(ApproxC::from_rat(1, out_prec));
  if (m == 0) return out;
  if (w.front().is_zero()) throw UsageError("half series: first letter must be nonzero");
  for (auto& a : w) check_letter(a);

  const double log_goal = -static_cast<double>(ctx.working_digits()) * std::log(10.0) - std::log(8.0);
  long N = 2 * m + 2;
  while (std::log(4.0) + log_term_bound(N + 1, m) > log_goal) {
    ++N;
    if (N > 50000000) throw NumericError("half series: truncation overflow");
  }
  const mpfr_prec_t prec = out_prec + 2 * m + 24 + static_cast<mpfr_prec_t>(std::log2(static_cast<double>(N)));

  std::vector<CNum> r;
  std::vector<bool> zero, re0, im0;
  for (auto& a : w) {
    bool z = a.is_zero();
    zero.push_back(z);
    CNum rc(prec);
    if (!z) {
      Cyc q = inv(a) * Rat(1, 2);
      ApproxC e = embed(q, prec);
      rc.re = e.re;
      rc.im = e.im;
    }
    re0.push_back(rc.re.is_zero());
    im0.push_back(rc.im.is_zero());
    r.push_back(std::move(rc));
  }

  std::vector<CNum> prev, cur, B, sum;
  for (int j = 0; j <= m; ++j) {
    prev.emplace_back(prec);
    cur.emplace_back(prec);
    B.emplace_back(prec);
    sum.emplace_back(prec);
  }
  mpfr_set_ui(prev[0].re.get(), 1, MPFR_RNDN);  // A_0(0) = 1
  CNum t(prec);
  Real tmp(prec);
  for (long n = 1; n <= N; ++n) {
    mpfr_set_zero(cur[0].re.get(), 1);  // A_0(n) = 0 for n >= 1
    for (int j = 1; j <= m; ++j) {
      if (zero[j - 1]) {
        mpfr_div_ui(cur[j].re.get(), cur[j - 1].re.get(), static_cast<unsigned long>(n), MPFR_RNDN);
        mpfr_div_ui(cur[j].im.get(), cur[j - 1].im.get(), static_cast<unsigned long>(n), MPFR_RNDN);
      } else {
        mpfr_add(t.re.get(), B[j].re.get(), prev[j - 1].re.get(), MPFR_RNDN);
        mpfr_add(t.im.get(), B[j].im.get(), prev[j - 1].im.get(), MPFR_RNDN);
        cmul(B[j], r[j - 1], t, re0[j - 1], im0[j - 1], tmp);
        mpfr_div_si(cur[j].re.get(), B[j].re.get(), -n, MPFR_RNDN);
        mpfr_div_si(cur[j].im.get(), B[j].im.get(), -n, MPFR_RNDN);
      }
      mpfr_add(sum[j].re.get(), sum[j].re.get(), cur[j].re.get(), MPFR_RNDN);
      mpfr_add(sum[j].im.get(), sum[j].im.get(), cur[j].im.get(), MPFR_RNDN);
    }
    std::swap(prev, cur);
  }

  // Rounding: each A_j(n) is the product of at most m n rounded factors and
  // rounded letters (relative error 2^-prec each, times a small constant);
  // the running sums add N more roundings. The majorant sums those effects
  // weighted by t_n.
  double rnd = 0;
  for (long n = 1; n <= N; ++n)
    rnd += (16.0 * m * static_cast<double>(n) + 2.0 * static_cast<double>(N) + 16.0) * std::exp(log_term_bound(n, m));
  Bound round_err = Bound(rnd * 1.01 + 1.0) * Bound::pow2(-static_cast<long>(prec));
  Bound tail = Bound(4.0 * std::exp(log_term_bound(N + 1, m)) * 1.01);
  for (int j = 1; j <= m; ++j) {
    Real re(out_prec), im(out_prec);
    mpfr_set(re.get(), sum[j].re.get(), MPFR_RNDN);
    mpfr_set(im.get(), sum[j].im.get(), MPFR_RNDN);
    Bound e = tail + round_err + Bound::ulp_of(re, out_prec - 1) + Bound::ulp_of(im, out_prec - 1);
    out.push_back({re, im, e});
  }
  return out;
}

inline int word_level(const P1Word& w, int fallback) {
  int level = fallback;
  for (auto& a : w)
    if (!a.is_rational()) level = a.level;
  return level;
}

inline P1Word normalize_level(const P1Word& w, int level) {
  P1Word out;
  for (auto a : w) {
    if (a.level != level) {
      if (!a.is_rational()) throw UsageError("P1 word mixes levels");
      a.level = level;
    }
    out.push_back(a);
  }
  return out;
}

}  // namespace detail

inline ApproxC eval_p1_half(const P1Word& letters, const Context& ctx) {
  int level = detail::word_level(letters, 4);
  P1Word w = detail::normalize_level(letters, level);
  return detail::half_prefixes(w, ctx).back();
}

// I(0; a_1..a_k; 1) = sum_s I(0; a_1..a_s; 1/2) (-1)^{k-s} I(0; 1-a_k..1-a_{s+1}; 1/2).
inline ApproxC eval_p1_full(const P1Word& letters, const Context& ctx) {
  const int k = static_cast<int>(letters.size());
  if (k == 0) return ApproxC::from_rat(1, ctx.bits());
  int level = detail::word_level(letters, 4);
  P1Word w = detail::normalize_level(letters, level);
  Cyc one(level, 1);
  if (w.front().is_zero()) throw UsageError("eval_p1_full: first letter is 0 (divergent)");
  if (w.back() == one) throw UsageError("eval_p1_full: last letter is 1 (divergent)");
  for (auto& a : w) {
    detail::check_letter(a);
    detail::check_letter(one - a);
  }
  ValueCache& cache = ValueCache::global();
  std::string key = p1_cache_key(w, level, ctx.bits());
  if (cache.enabled())
    if (auto hit = cache.get(key)) return *hit;

  P1Word flipped;
  for (int i = k - 1; i >= 0; --i) flipped.push_back(one - w[i]);
  auto P = detail::half_prefixes(w, ctx);
  auto Q = detail::half_prefixes(flipped, ctx);
  ApproxC total = ApproxC::zero(ctx.bits());
  for (int s = 0; s <= k; ++s) {
    ApproxC term = P[s] * Q[k - s];
    total = total + ((k - s) % 2 ? -term : term);
  }
  if (cache.enabled()) cache.put(key, total);
  return total;
}

inline ApproxC eval_p1_comb(const P1Comb& x, const Context& ctx) {
  ApproxC total = ApproxC::zero(ctx.bits());
  for (auto& [w, c] : x.terms) total = total + embed(c, ctx.bits()) * eval_p1_full(w, ctx);
  return total;
}

// I_f(eta_1...eta_k) through the pullback to P1 words.
inline ApproxR eval_curve_word(const CurveWord& w, const Context& ctx) {
  if (!is_admissible(w)) throw UsageError("eval_curve_word: word " + w.to_string() + " is not admissible");
  if (w.letters.empty()) return ApproxR::from_rat(1, ctx.bits());
  ApproxC v = eval_p1_comb(pullback_word(w), ctx);
  if (!(Bound::abs_of(v.im) <= v.err))
    throw NumericError("eval_curve_word: imaginary residual " + v.im.to_string(6) + " exceeds error bound " +
                       v.err.to_string());
  if (!(v.err <= ctx.target())) throw NumericError("eval_curve_word: error bound above target");
  return v.real_part();
}

// Li_k(z) = -I(0; z^{-1}, 0^{k-1}; 1) for z a root of unity (k >= 2 when z = 1).
inline ApproxC polylog_root(int k, const Cyc& z, const Context& ctx) {
  if (k < 1) throw UsageError("polylog_root: k must be >= 1");
  if (z.is_zero()) throw UsageError("polylog_root: z = 0");
  if (abs2(z) != 1) throw UsageError("polylog_root: |z| must be 1");
  if (k == 1 && z == Cyc(z.level, 1)) throw UsageError("polylog_root: Li_1(1) diverges");
  P1Word w{inv(z)};
  for (int i = 1; i < k; ++i) w.push_back(Cyc(z.level, 0));
  return -eval_p1_full(w, ctx);
}

// Multiple L-value of level N: (-1)^d I(0; a_1^{-1}, 0^{k_1-1}, ..., a_d^{-1}, 0^{k_d-1}; 1).
inline ApproxC mlv(const std::vector<int>& ks, const std::vector<Cyc>& alphas, int N, const Context& ctx) {
  if (ks.empty() || ks.size() != alphas.size()) throw UsageError("mlv: index lists must be nonempty and of equal length");
  if (N != 4 && N != 6) throw UsageError("mlv: level must be 4 or 6");
  P1Word w;
  for (size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] < 1) throw UsageError("mlv: k_j must be >= 1");
    Cyc a = alphas[i];
    if (a.is_rational()) a.level = N;
    if (a.level != N || cyc_pow(a, N) != Cyc(N, 1)) throw UsageError("mlv: alpha_j must be an N-th root of unity");
    w.push_back(inv(a));
    for (int j = 1; j < ks[i]; ++j) w.push_back(Cyc(N, 0));
  }
  if (ks.back() == 1 && alphas.back() == Cyc(alphas.back().level, 1)) throw UsageError("mlv: (k_d, alpha_d) = (1, 1) diverges");
  ApproxC v = eval_p1_full(w, ctx);
  return ks.size() % 2 ? -v : v;
}

// Kaneko-Tsumura T~(k_1..k_d) = I_g(w2 w3^{k_1-1} ... w2 w3^{k_d-1}).
inline CurveWord ttilde_word(const std::vector<int>& ks) {
  if (ks.empty()) throw UsageError("ttilde: empty index");
  std::vector<int> ls;
  for (int k : ks) {
    if (k < 1) throw UsageError("ttilde: k_j must be >= 1");
    ls.push_back(2);
    for (int i = 1; i < k; ++i) ls.push_back(3);
  }
  return CurveWord(Curve::g, ls);
}

inline ApproxR ttilde(const std::vector<int>& ks, const Context& ctx) { return eval_curve_word(ttilde_word(ks), ctx); }

// ---------------------------------------------------------------------------
// Direct curve-level series sum_{0<n_1<=...<=n_k<=N} prod c(n_j - n_{j-1}, eta_j)/n_j,
// in double precision with FFT convolutions.

namespace detail {

inline std::vector<double> coeff_c_double(int index, long N) {
  std::vector<double> c(N + 1, 0.0);
  std::vector<double> b(N / 2 + 2);  // C(2m,m)/4^m
  b[0] = 1;
  for (size_t m = 1; m < b.size(); ++m) b[m] = b[m - 1] * (2.0 * m - 1) / (2.0 * m);
  double p = 1;  // (3/4)^m
  double run = 0;
  for (long n = 0; n <= N; ++n) {
    long m = n / 2;
    switch (index) {
      case 0: c[n] = n == 0; break;
      case 1: c[n] = n != 0; break;
      case 2: c[n] = n % 2 ? b[(n - 1) / 2] : 0; break;
      case 3: c[n] = n % 2 ? 0 : b[m]; break;
      case 4: c[n] = n % 2 ? 0.5 * std::pow(0.75, (n - 1) / 2) * b[(n - 1) / 2] : 0; break;
      case 5: c[n] = n % 2 ? 0 : 0.5 * std::pow(0.75, m) * b[m]; break;
      case 6:
        // running sum over 2m <= n-1
        if (n >= 1 && (n - 1) % 2 == 0) {
          run += p * b[(n - 1) / 2];
          p *= 0.75;
        }
        c[n] = 0.5 * run;
        break;
    }
  }
  return c;
}

// Linear convolution truncated to [0, N].
inline std::vector<double> convolve(const std::vector<double>& x, const std::vector<double>& y) {
  const size_t n = x.size();
  size_t L = 1;
  while (L < 2 * n) L <<= 1;
  std::vector<double> a(L, 0.0), b(L, 0.0);
  std::copy(x.begin(), x.end(), a.begin());
  std::copy(y.begin(), y.end(), b.begin());
  fftw_complex* fa = fftw_alloc_complex(L / 2 + 1);
  fftw_complex* fb = fftw_alloc_complex(L / 2 + 1);
  static std::mutex plan_mu;  // FFTW planning is not thread-safe
  fftw_plan pa, pb, pi;
  {
    std::lock_guard<std::mutex> lock(plan_mu);
    pa = fftw_plan_dft_r2c_1d(static_cast<int>(L), a.data(), fa, FFTW_ESTIMATE);
    pb = fftw_plan_dft_r2c_1d(static_cast<int>(L), b.data(), fb, FFTW_ESTIMATE);
    pi = fftw_plan_dft_c2r_1d(static_cast<int>(L), fa, a.data(), FFTW_ESTIMATE);
  }
  fftw_execute(pa);
  fftw_execute(pb);
  for (size_t i = 0; i <= L / 2; ++i) {
    double re = fa[i][0] * fb[i][0] - fa[i][1] * fb[i][1];
    double im = fa[i][0] * fb[i][1] + fa[i][1] * fb[i][0];
    fa[i][0] = re / static_cast<double>(L);
    fa[i][1] = im / static_cast<double>(L);
  }
  fftw_execute(pi);
  {
    std::lock_guard<std::mutex> lock(plan_mu);
    fftw_destroy_plan(pa);
    fftw_destroy_plan(pb);
    fftw_destroy_plan(pi);
  }
  fftw_free(fa);
  fftw_free(fb);
  a.resize(n);
  return a;
}

// Cumulative partial sums P(M) = sum_{n<=M} S_k(n), M = 0..N.
inline std::vector<long double> direct_partial_sums(const CurveWord& w, long N) {
  std::vector<double> S(N + 1, 0.0);
  S[0] = 1;  // n_0 = 0
  for (int p = 0; p < w.weight(); ++p) {
    int idx = w.letters[p];
    std::vector<double> T;
    if (idx == 0) {
      T = S;
    } else if (idx == 1) {
      T.assign(N + 1, 0.0);
      long double acc = 0;
      for (long n = 1; n <= N; ++n) {
        acc += S[n - 1];
        T[n] = static_cast<double>(acc);
      }
    } else if (p == 0) {
      T = coeff_c_double(idx, N);
    } else {
      T = convolve(S, coeff_c_double(idx, N));
    }
    S.assign(N + 1, 0.0);
    for (long n = 1; n <= N; ++n) S[n] = T[n] / static_cast<double>(n);
  }
  std::vector<long double> P(N + 1, 0.0L);
  for (long n = 1; n <= N; ++n) P[n] = P[n - 1] + S[n];
  return P;
}

// Tail model of the partial sums: P(M) = L + sum_{a=1..3} M^{-a/2} (c_{a,0} + c_{a,1} log M + ...),
// with logs[a-1] log powers at order a. Fitted by least squares on geometrically
// spaced M in [N/100, N]; returns L.
struct TailModel {
  std::array<int, 3> logs{1, 0, 0};
};

inline long double fit_tail(const std::vector<long double>& P, long N, const TailModel& m) {
  constexpr int kPoints = 40;
  int cols = 1 + m.logs[0] + m.logs[1] + m.logs[2];
  Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> A(kPoints, cols);
  Eigen::Matrix<long double, Eigen::Dynamic, 1> y(kPoints);
  const long double ratio = std::pow(0.01L, 1.0L / (kPoints - 1));
  for (int i = 0; i < kPoints; ++i) {
    long M = std::max(1L, static_cast<long>(static_cast<long double>(N) * std::pow(ratio, i)));
    long double h = 1 / std::sqrt(static_cast<long double>(M)), L = std::log(static_cast<long double>(M));
    int c = 0;
    A(i, c++) = 1;
    long double hp = 1;
    for (int a = 0; a < 3; ++a) {
      hp *= h;
      long double lp = 1;
      for (int q = 0; q < m.logs[a]; ++q, lp *= L) A(i, c++) = hp * lp;
    }
    y(i) = P[M];
  }
  return A.colPivHouseholderQr().solve(y)(0);
}

}  // namespace detail

struct DirectSeries {
  ApproxR partial;       // partial sum up to N; err = distance to the extrapolated value
  ApproxR extrapolated;  // least-squares tail-model limit; err is heuristic
  bool heuristic = true;
};

// Partial sums up to N_terms, plus a limit estimate: every tail model with
// 1..3 logs at order N^{-1/2}, 0..3 at N^{-1} and 0..1 at N^{-3/2} is fitted on
// [N/100, N] and on [N/200, N/2]; the model whose two fits agree best wins.
// The error is four times the larger of that disagreement and the spread
// among the three most stable models. Below N = 2000 no fit is attempted.
inline DirectSeries eval_curve_direct(const CurveWord& w, long N_terms, const Context& ctx) {
  if (!is_admissible(w)) throw UsageError("eval_curve_direct: word " + w.to_string() + " is not admissible");
  if (N_terms < 10) throw UsageError("eval_curve_direct: N_terms must be >= 10");
  const long N = N_terms;
  auto P = detail::direct_partial_sums(w, N);
  long double partial = P[N], limit = partial, spread = 0;
  if (N < 2000) {
    spread = std::fabs(P[N] - P[N / 2]);
  } else {
    std::vector<std::pair<long double, long double>> fits;  // (instability, value)
    for (int a = 1; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b)
        for (int c = 0; c <= 1; ++c) {
          detail::TailModel m{{a, b, c}};
          long double f0 = detail::fit_tail(P, N, m), f1 = detail::fit_tail(P, N / 2, m);
          if (std::isfinite(f0) && std::isfinite(f1)) fits.push_back({std::fabs(f0 - f1), f0});
        }
    std::sort(fits.begin(), fits.end());
    if (fits.empty()) throw NumericError("eval_curve_direct: no tail model could be fitted");
    limit = fits[0].second;
    spread = fits[0].first;
    for (size_t j = 1; j < std::min<size_t>(3, fits.size()); ++j)
      spread = std::max(spread, std::fabs(fits[j].second - limit));
  }
  mpfr_prec_t prec = ctx.bits();
  Real fv(static_cast<double>(limit), prec), pv(static_cast<double>(partial), prec);
  DirectSeries out;
  out.extrapolated = {fv, Bound(static_cast<double>(4 * spread) + 1e-12)};
  out.partial = {pv, Bound(static_cast<double>(std::fabs(partial - limit) + 4 * spread) + 1e-12)};
  return out;
}

}  // namespace itercurve

#endif
