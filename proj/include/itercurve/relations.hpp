#ifndef ITERCURVE_RELATIONS_HPP
#define ITERCURVE_RELATIONS_HPP

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "eval.hpp"
#include "pslq.hpp"

namespace itercurve {

struct RankEstimate {
  int rank = 0;
  std::vector<RelationReport> relations;
  std::vector<size_t> basis;  // indices of the values kept as independent
  bool heuristic = true;
};

// Greedy rank of a value family: each candidate is tested against the current
// independent set; a detected relation must hold to 10^(-1.2 P) in the
// doubled-precision values before it is accepted.
inline RankEstimate rank_estimate(const std::vector<ApproxR>& values, const std::vector<ApproxR>& values_2p,
                                  const Context& ctx, const PslqOptions& opt = {}) {
  if (values.size() != values_2p.size()) throw UsageError("rank_estimate: value lists differ in length");
  RankEstimate out;
  const long P = ctx.precision_digits;
  const Bound detect = Bound::pow10(-static_cast<long>(std::floor(opt.threshold_exponent * P)));
  const Bound confirm = Bound::pow10(-static_cast<long>(std::floor(2 * opt.threshold_exponent * P)));
  auto confirm_relation = [&](RelationReport rep, const std::vector<size_t>& idx) {
    std::vector<ApproxR> xs2;
    for (size_t i : idx) xs2.push_back(values_2p[i]);
    ApproxR r2 = detail::relation_residual(rep.coeffs, xs2);
    if (!(Bound::abs_of(r2.value) <= confirm)) {
      std::ostringstream msg;
      msg << "rank_estimate: relation found at P=" << P << " fails at " << 2 * P << " digits (residual "
          << r2.value.to_string(3) << ")";
      throw NumericError(msg.str());
    }
    rep.residual = r2;
    rep.confirmed = true;
    // express the coefficients over the full family
    std::vector<mpz_class> full(values.size(), 0);
    for (size_t j = 0; j < idx.size(); ++j) full[idx[j]] = rep.coeffs[j];
    rep.coeffs = full;
    out.relations.push_back(rep);
  };
  for (size_t c = 0; c < values.size(); ++c) {
    std::vector<size_t> idx = out.basis;
    idx.push_back(c);
    if (out.basis.empty()) {
      if (Bound::abs_of(values[c].value) <= detect) {
        RelationReport rep;
        rep.coeffs = {1};
        rep.residual = {abs(values[c].value), values[c].err};
        confirm_relation(rep, idx);
      } else {
        out.basis.push_back(c);
      }
      continue;
    }
    std::vector<ApproxR> xs;
    for (size_t i : idx) xs.push_back(values[i]);
    PslqResult r = pslq(xs, ctx, opt);
    if (r.relation && r.relation->coeffs.back() != 0) {
      confirm_relation(*r.relation, idx);
    } else if (r.relation) {
      throw NumericError("rank_estimate: relation among values already taken as independent");
    } else {
      out.basis.push_back(c);
    }
  }
  out.rank = static_cast<int>(out.basis.size());
  return out;
}

// ---------------------------------------------------------------------------
// Exact shuffle relations I(u) I(v) = I(u sh v).

struct ShuffleRelation {
  CurveWord u, v;
  WordComb product;
};

struct ShuffleRelationSet {
  std::vector<ShuffleRelation> relations;
  int exact_rank = 0;  // Q-rank of the span of the products u sh v
};

// Rank of a rational matrix by fraction-free (Bareiss) elimination after
// clearing denominators row by row.
inline int exact_rank(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return 0;
  size_t ncol = rows.front().size();
  std::vector<std::vector<mpz_class>> M;
  for (auto& r : rows) {
    mpz_class d = 1;
    for (auto& q : r) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den_mpz_t());
    std::vector<mpz_class> z(ncol);
    for (size_t j = 0; j < ncol; ++j) z[j] = Rat(r[j] * d).get_num();
    M.push_back(z);
  }
  int rank = 0;
  mpz_class prev = 1;
  size_t nrow = M.size();
  for (size_t col = 0; col < ncol && rank < static_cast<int>(nrow); ++col) {
    size_t piv = rank;
    while (piv < nrow && M[piv][col] == 0) ++piv;
    if (piv == nrow) continue;
    std::swap(M[piv], M[rank]);
    for (size_t i = rank + 1; i < nrow; ++i) {
      for (size_t j = col + 1; j < ncol; ++j) {
        mpz_class t = M[rank][col] * M[i][j] - M[i][col] * M[rank][j];
        mpz_divexact(M[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      M[i][col] = 0;
    }
    prev = M[rank][col];
    ++rank;
  }
  return rank;
}

// All identities from unordered pairs {u, v} of nonempty admissible words with |u| + |v| = k.
inline ShuffleRelationSet shuffle_relations(Curve curve, int k) {
  if (k < 2) throw UsageError("shuffle_relations: k must be >= 2");
  ShuffleRelationSet out;
  for (int a = 1; 2 * a <= k; ++a) {
    auto us = enumerate_admissible(curve, a);
    auto vs = enumerate_admissible(curve, k - a);
    for (size_t i = 0; i < us.size(); ++i)
      for (size_t j = (a == k - a ? i : 0); j < vs.size(); ++j)
        out.relations.push_back({us[i], vs[j], shuffle(us[i], vs[j])});
  }
  auto words = enumerate_admissible(curve, k);
  std::map<CurveWord, size_t> pos;
  for (size_t i = 0; i < words.size(); ++i) pos[words[i]] = i;
  std::vector<std::vector<Rat>> rows;
  for (auto& r : out.relations) {
    std::vector<Rat> row(words.size(), 0);
    for (auto& [w, q] : r.product) row.at(pos.at(w)) = q;
    rows.push_back(row);
  }
  out.exact_rank = exact_rank(rows);
  return out;
}

struct ShuffleCheck {
  std::string identity;
  Bound residual;
  bool pass = false;
};

// Numeric residual |I(u) I(v) - I(u sh v)| for every identity of total weight 2..max_weight.
inline std::vector<ShuffleCheck> verify_shuffle(Curve curve, int max_weight, const Context& ctx, const Bound& tol) {
  std::vector<ShuffleCheck> out;
  for (int k = 2; k <= max_weight; ++k)
    for (auto& r : shuffle_relations(curve, k).relations) {
      ApproxR lhs = eval_curve_word(r.u, ctx) * eval_curve_word(r.v, ctx);
      ApproxR rhs = ApproxR::from_rat(0, ctx.bits());
      for (auto& [w, q] : r.product) rhs = rhs + eval_curve_word(w, ctx) * q;
      Bound res = residual(lhs, rhs);
      out.push_back({"(" + r.u.to_string() + ") sh (" + r.v.to_string() + ")", res, res <= tol});
    }
  return out;
}

// I(phi^k) = I(phi)^k / k!, phi = w2 (g) or w4 (h).
inline std::vector<ShuffleCheck> verify_symmetric_power(Curve curve, int kmax, const Context& ctx, const Bound& tol) {
  std::vector<ShuffleCheck> out;
  int phi = curve == Curve::g ? 2 : 4;
  ApproxR base = eval_curve_word(CurveWord(curve, {phi}), ctx);
  ApproxR p = base;
  mpz_class fact = 1;
  for (int k = 2; k <= kmax; ++k) {
    p = p * base;
    fact *= k;
    ApproxR lhs = eval_curve_word(CurveWord(curve, std::vector<int>(k, phi)), ctx);
    Bound res = residual(lhs, p * Rat(mpz_class(1), fact));
    out.push_back({"phi^" + std::to_string(k), res, res <= tol});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dimension generating functions.

namespace detail {
using Poly = std::vector<mpz_class>;

inline Poly pmul(const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// Taylor coefficients of num/den (den[0] = 1) by the linear recurrence.
inline std::vector<mpz_class> series_div(const Poly& num, const Poly& den, int kmax) {
  if (den.empty() || den[0] != 1) throw UsageError("series_div: constant term of the denominator must be 1");
  std::vector<mpz_class> c(kmax + 1, 0);
  for (int n = 0; n <= kmax; ++n) {
    mpz_class v = n < static_cast<int>(num.size()) ? num[n] : mpz_class(0);
    for (int j = 1; j < static_cast<int>(den.size()) && j <= n; ++j) v -= den[j] * c[n - j];
    c[n] = v;
  }
  return c;
}
}  // namespace detail

// Series ids: D_g, D_h, D_g0, D_g1, D_h0, D_h1, mzv_d, A_FR(r1,r2,dimR), H_FR(r1,r2,dimR).
inline std::vector<mpz_class> dim_series(const std::string& which, int kmax) {
  using detail::Poly;
  if (kmax < 0) throw UsageError("dim_series: kmax must be >= 0");
  const Poly g_den{1, -2}, h_den = detail::pmul({1, -3, 1}, {1, 1, -1});
  if (which == "D_g") return detail::series_div({1}, g_den, kmax);
  if (which == "D_h") return detail::series_div({1}, {1, -3, 1}, kmax);
  if (which == "D_g0") return detail::series_div({1, -1}, g_den, kmax);
  if (which == "D_g1") return detail::series_div({0, 1}, g_den, kmax);
  if (which == "D_h0") return detail::series_div({1, -1}, h_den, kmax);
  if (which == "D_h1") return detail::series_div({0, 2, -1}, h_den, kmax);
  if (which == "mzv_d") return detail::series_div({1}, {1, 0, -1, -1}, kmax);
  bool a = which.rfind("A_FR(", 0) == 0, h = which.rfind("H_FR(", 0) == 0;
  if ((a || h) && which.back() == ')') {
    std::string args = which.substr(5, which.size() - 6);
    std::replace(args.begin(), args.end(), ',', ' ');
    std::istringstream in(args);
    long r1, r2, dim_r;
    if (!(in >> r1 >> r2 >> dim_r) || r1 < 0 || r2 < 0 || dim_r < 0) throw UsageError("dim_series: bad arguments in " + which);
    std::string rest;
    if (in >> rest) throw UsageError("dim_series: bad arguments in " + which);
    // (1 - R t - (r2 t^2 + (r1+r2) t^3)/(1-t^2))^{-1} = (1-t^2) / ((1-t^2)(1-R t) - r2 t^2 - (r1+r2) t^3)
    Poly den = detail::pmul({1, 0, -1}, {1, -dim_r});
    den[2] -= r2;
    den[3] -= r1 + r2;
    Poly num{1, 0, -1};
    if (h) den = detail::pmul(den, {1, -1});
    return detail::series_div(num, den, kmax);
  }
  throw UsageError("dim_series: unknown series '" + which + "'");
}

// ---------------------------------------------------------------------------
// Polylogarithm identities at roots of unity.

struct IdentityCheck {
  std::string name;
  int k = 0;
  int level = 0;
  Bound residual;
  Bound threshold;
  bool pass = false;
};

inline std::vector<IdentityCheck> verify_distribution(int kmax, int N, const Context& ctx) {
  if (kmax < 2) throw UsageError("verify_distribution: kmax must be >= 2");
  if (N != 4 && N != 6) throw UsageError("verify_distribution: N must be 4 or 6");
  const Bound tol = Bound::pow10(-(ctx.precision_digits - 10));
  const mpfr_prec_t prec = ctx.bits();
  std::vector<IdentityCheck> out;
  auto li = [&](int k, const Cyc& z) { return polylog_root(k, z, ctx); };
  auto push = [&](const std::string& name, int k, const ApproxC& lhs, const ApproxC& rhs) {
    Bound r = residual(lhs, rhs);
    out.push_back({name, k, N, r, tol, r <= tol});
  };
  auto two_pow = [](int e) { return e >= 0 ? Rat(mpz_class(1) << e) : Rat(mpz_class(1), mpz_class(1) << -e); };
  auto three_pow = [](int e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(e >= 0 ? e : -e));
    return e >= 0 ? Rat(p) : Rat(mpz_class(1), p);
  };
  for (int k = 2; k <= kmax; ++k) {
    ApproxC zk(zeta(k, ctx));
    if (N == 4) {
      Cyc i = Cyc::xi(4), one(4, 1);
      ApproxC s = li(k, i) + li(k, -i);
      push("Li_k(-1) = 2^(k-1) (Li_k(i) + Li_k(-i))", k, li(k, -one), s * two_pow(k - 1));
      push("Li_k(i) + Li_k(-i) = 2^(1-k) (2^(1-k) - 1) zeta(k)", k, s, zk * (two_pow(1 - k) * (two_pow(1 - k) - 1)));
      push("Li_k(1) + Li_k(-1) = 2^(1-k) zeta(k)", k, li(k, one) + li(k, -one), zk * two_pow(1 - k));
    } else {
      Cyc x6 = Cyc::xi(6), one(6, 1);
      Cyc x3 = x6 * x6;
      ApproxC s = li(k, x6) + li(k, -x6);
      push("Li_k(xi_3) = 2^(k-1) (Li_k(xi_6) + Li_k(-xi_6))", k, li(k, x3), s * two_pow(k - 1));
      // 2^-k (3^(1-k) - 1) zeta(k) + 2^-k sqrt(-3) L(k, chi_-3)
      ApproxR L = dirichlet_L_chi3(k, ctx);
      Real s3(3L, prec);
      mpfr_sqrt(s3.get(), s3.get(), MPFR_RNDN);
      ApproxC sqrt_m3_L{Real(prec), L.value * s3, L.err * Bound(1.7320509) + Bound::ulp_of(L.value * s3, prec - 3)};
      ApproxC rhs = zk * (two_pow(-k) * (three_pow(1 - k) - 1)) + sqrt_m3_L * two_pow(-k);
      push("Li_k(xi_6) + Li_k(-xi_6) = 2^-k (3^(1-k) - 1) zeta(k) + 2^-k sqrt(-3) L(k, chi_-3)", k, s, rhs);
      push("Li_k(xi_3) + Li_k(xi_3^-1) = (3^(1-k) - 1) zeta(k)", k, li(k, x3) + li(k, conj(x3)),
           zk * (three_pow(1 - k) - 1));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dimension table reproduction.

struct DimRow {
  int k = 0;
  long count_B = 0;
  long D = 0;
  long D0 = 0, D1 = 0;
  int rank = -1, rank_parity0 = -1, rank_parity1 = -1;
  int expected_rank = -1, expected_parity0 = -1, expected_parity1 = -1;
  int relations = 0;
  int shuffle_rank = 0;
  bool matches() const {
    return (expected_rank < 0 || rank == expected_rank) && (expected_parity0 < 0 || rank_parity0 == expected_parity0) &&
           (expected_parity1 < 0 || rank_parity1 == expected_parity1);
  }
};

struct DimTable {
  Curve curve = Curve::g;
  int precision = 0;
  std::string status = "experimental";
  std::vector<DimRow> rows;

  static constexpr int schema_version = 1;

  std::string to_csv() const {
    std::ostringstream o;
    o << "curve,k,count_B,D,rank,rank_parity0,rank_parity1,precision,status\n";
    for (auto& r : rows)
      o << curve_name(curve) << ',' << r.k << ',' << r.count_B << ',' << r.D << ',' << r.rank << ',' << r.rank_parity0
        << ',' << r.rank_parity1 << ',' << precision << ',' << status << '\n';
    return o.str();
  }
  nlohmann::json to_json() const {
    nlohmann::json rs = nlohmann::json::array();
    for (auto& r : rows)
      rs.push_back({{"curve", curve_name(curve)},
                    {"k", r.k},
                    {"count_B", r.count_B},
                    {"D", r.D},
                    {"rank", r.rank},
                    {"rank_parity0", r.rank_parity0},
                    {"rank_parity1", r.rank_parity1},
                    {"precision", precision},
                    {"status", status}});
    return {{"schema_version", schema_version}, {"rows", rs}};
  }
};

// Published experimental rows, k = 0..5.
inline const std::vector<int>& published_ranks(Curve c, int parity) {
  static const std::vector<int> g{1, 1, 3, 7, 15, 31}, g0{1, 0, 1, 3, 7, 15}, g1{0, 1, 2, 4, 8, 16};
  static const std::vector<int> h{1, 1, 5, 15, 46, 105}, h0{1, 0, 3, 8, 25, 53}, h1{0, 1, 2, 7, 21, 52};
  if (c == Curve::g) return parity < 0 ? g : parity == 0 ? g0 : g1;
  return parity < 0 ? h : parity == 0 ? h0 : h1;
}

struct TableOptions {
  bool allow_large = false;  // lift the weight guard (g: 4, h: 3)
  bool parity_split = true;
  PslqOptions pslq;
};

inline DimTable reproduce_dim_table(Curve curve, int kmax, const Context& ctx, const TableOptions& opt = {}) {
  int cap = curve == Curve::g ? 4 : 3;
  if (kmax < 0) throw UsageError("reproduce_dim_table: kmax must be >= 0");
  if (kmax > cap && !opt.allow_large)
    throw UsageError("reproduce_dim_table: weight " + std::to_string(kmax) + " exceeds the default guard " +
                     std::to_string(cap) + " for curve " + curve_name(curve));
  DimTable t;
  t.curve = curve;
  t.precision = ctx.precision_digits;
  auto D = dim_series(curve == Curve::g ? "D_g" : "D_h", kmax);
  auto D0 = dim_series(curve == Curve::g ? "D_g0" : "D_h0", kmax);
  auto D1 = dim_series(curve == Curve::g ? "D_g1" : "D_h1", kmax);
  Context ctx2 = ctx.doubled();
  for (int k = 0; k <= kmax; ++k) {
    DimRow r;
    r.k = k;
    r.D = D[k].get_si();
    r.D0 = D0[k].get_si();
    r.D1 = D1[k].get_si();
    if (k < 6) {
      r.expected_rank = published_ranks(curve, -1)[k];
      r.expected_parity0 = published_ranks(curve, 0)[k];
      r.expected_parity1 = published_ranks(curve, 1)[k];
    }
    if (k == 0) {
      r.count_B = 1;
      r.rank = r.rank_parity0 = 1;
      r.rank_parity1 = 0;
      t.rows.push_back(r);
      continue;
    }
    auto words = enumerate_admissible(curve, k);
    r.count_B = static_cast<long>(words.size());
    std::vector<ApproxR> v, v2;
    std::vector<ApproxR> par_v[2], par_v2[2];
    for (auto& w : words) {
      v.push_back(eval_curve_word(w, ctx));
      v2.push_back(eval_curve_word(w, ctx2));
      int p = parity_component(w);
      par_v[p].push_back(v.back());
      par_v2[p].push_back(v2.back());
    }
    RankEstimate est = rank_estimate(v, v2, ctx, opt.pslq);
    r.rank = est.rank;
    r.relations = static_cast<int>(est.relations.size());
    if (k >= 2) r.shuffle_rank = shuffle_relations(curve, k).exact_rank;
    if (opt.parity_split) {
      r.rank_parity0 = par_v[0].empty() ? 0 : rank_estimate(par_v[0], par_v2[0], ctx, opt.pslq).rank;
      r.rank_parity1 = par_v[1].empty() ? 0 : rank_estimate(par_v[1], par_v2[1], ctx, opt.pslq).rank;
    } else {
      r.expected_parity0 = r.expected_parity1 = -1;
    }
    t.rows.push_back(r);
  }
  return t;
}

}  // namespace itercurve

#endif
