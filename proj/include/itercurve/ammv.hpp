#ifndef ITERCURVE_AMMV_HPP
#define ITERCURVE_AMMV_HPP

#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "eval.hpp"

namespace itercurve {

struct AmmvIndex {
  std::vector<int> k, eps, sigma;

  int depth() const { return static_cast<int>(k.size()); }
  int weight() const {
    int w = 0;
    for (int x : k) w += x;
    return w;
  }
  // k_d >= 2, or k_d = 1 with sigma_d = -1.
  bool convergent() const { return !k.empty() && (k.back() >= 2 || sigma.back() == -1); }
  void validate() const {
    if (k.empty() || k.size() != eps.size() || k.size() != sigma.size())
      throw UsageError("AMMV index: k, eps, sigma must be nonempty and of equal length");
    for (size_t i = 0; i < k.size(); ++i) {
      if (k[i] < 1) throw UsageError("AMMV index: k_j must be >= 1");
      if (std::abs(eps[i]) != 1 || std::abs(sigma[i]) != 1) throw UsageError("AMMV index: eps_j, sigma_j must be +-1");
    }
    if (!convergent()) throw UsageError("AMMV index " + to_string() + " is divergent");
  }
  std::string to_string() const {
    std::ostringstream o;
    auto list = [&o](const std::vector<int>& v, bool sign) {
      o << '(';
      for (size_t i = 0; i < v.size(); ++i) {
        if (i) o << ',';
        if (sign) o << (v[i] > 0 ? '+' : '-');
        else o << v[i];
      }
      o << ')';
    };
    o << "k=";
    list(k, false);
    o << " eps=";
    list(eps, true);
    o << " sigma=";
    list(sigma, true);
    return o.str();
  }
};

// CLI syntax: k "1,2", eps "+,-", sigma "-,+" (also "1,-1").
inline AmmvIndex parse_ammv_index(const std::string& k, const std::string& eps, const std::string& sigma) {
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
      if (c == ',' || c == ' ') {
        if (!cur.empty()) out.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
  };
  auto sign = [](const std::string& t) {
    if (t == "+" || t == "+1" || t == "1") return 1;
    if (t == "-" || t == "-1") return -1;
    throw UsageError("bad sign '" + t + "'");
  };
  AmmvIndex idx;
  for (auto& t : split(k)) {
    try {
      size_t pos;
      idx.k.push_back(std::stoi(t, &pos));
      if (pos != t.size()) throw UsageError("bad k entry '" + t + "'");
    } catch (const std::logic_error&) {
      throw UsageError("bad k entry '" + t + "'");
    }
  }
  for (auto& t : split(eps)) idx.eps.push_back(sign(t));
  for (auto& t : split(sigma)) idx.sigma.push_back(sign(t));
  idx.validate();
  return idx;
}

// Every convergent index of total weight w.
inline std::vector<AmmvIndex> enumerate_ammv(int w) {
  std::vector<AmmvIndex> out;
  // compositions of w
  std::vector<std::vector<int>> comps;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      comps.push_back(cur);
      return;
    }
    for (int p = 1; p <= rest; ++p) {
      cur.push_back(p);
      rec(rest - p);
      cur.pop_back();
    }
  };
  rec(w);
  for (auto& c : comps) {
    int d = static_cast<int>(c.size());
    for (int e = 0; e < (1 << d); ++e)
      for (int s = 0; s < (1 << d); ++s) {
        AmmvIndex idx{c, std::vector<int>(d), std::vector<int>(d)};
        for (int j = 0; j < d; ++j) {
          idx.eps[j] = (e >> j) & 1 ? -1 : 1;
          idx.sigma[j] = (s >> j) & 1 ? -1 : 1;
        }
        if (idx.convergent()) out.push_back(idx);
      }
  }
  return out;
}

struct SeriesValue {
  long double value = 0;
  long double err = 0;  // heuristic
};

// Nested sum over 0 < n_1 < ... < n_d <= N, long double with running prefix sums.
inline SeriesValue ammv_series(const AmmvIndex& idx, long N_terms) {
  idx.validate();
  if (N_terms < 1000) throw UsageError("ammv_series: N_terms must be >= 1000");
  const int d = idx.depth();
  // prefix[j] = sum over n_1 < ... < n_j <= current n
  std::vector<long double> prefix(d + 1, 0);
  prefix[0] = 1;
  long double at_half = 0, last_term = 0;
  for (long n = 1; n <= N_terms; ++n) {
    int parity = n % 2 == 0 ? 1 : -1;
    std::vector<long double> add(d + 1, 0);
    for (int j = 1; j <= d; ++j) {
      if (parity != idx.eps[j - 1]) continue;
      long e = (2 * n + 1 - idx.eps[j - 1]) / 4;
      long double s = (idx.sigma[j - 1] == -1 && e % 2) ? -1 : 1;
      long double f = 2 * s / std::pow(static_cast<long double>(n), idx.k[j - 1]);
      add[j] = f * prefix[j - 1];  // prefix[j-1] still excludes n, so n_{j-1} < n
    }
    for (int j = 1; j <= d; ++j) prefix[j] += add[j];
    if (add[d] != 0) last_term = add[d];
    if (n == N_terms / 2) at_half = prefix[d];
  }
  SeriesValue out;
  out.value = prefix[d];
  out.err = 2 * std::abs(out.value - at_half) + std::abs(last_term);
  return out;
}

namespace detail {
// omega_sigma^eps as a P1 combination at level 4.
inline P1Comb ammv_form(int sigma, int eps) {
  P1Comb c(4);
  Cyc one(4, 1), m1(4, -1), i = Cyc::xi(4);
  if (sigma == 1 && eps == -1) {  // 2 dl/(1-l^2)
    c.add({one}, m1);
    c.add({m1}, one);
  } else if (sigma == 1 && eps == 1) {  // 2l dl/(1-l^2)
    c.add({one}, m1);
    c.add({m1}, m1);
  } else if (sigma == -1 && eps == -1) {  // -2 dl/(1+l^2)
    c.add({i}, i);
    c.add({-i}, -i);
  } else {  // -2l dl/(1+l^2)
    c.add({i}, m1);
    c.add({-i}, m1);
  }
  return c;
}
}  // namespace detail

// Iterated-integral word of the index, a combination of P1 words over {0, +-1, +-i}.
inline P1Comb ammv_word(const AmmvIndex& idx) {
  idx.validate();
  const int d = idx.depth();
  P1Comb out(4);
  out.add({}, Cyc(4, 1));
  P1Comb zero(4);
  zero.add({Cyc(4, 0)}, Cyc(4, 1));
  for (int j = 0; j < d; ++j) {
    int sig = 1;
    for (int l = j; l < d; ++l) sig *= idx.sigma[l];
    P1Comb form;
    if (j == 0) {
      form = detail::ammv_form(sig, idx.eps[0]);
    } else {
      form = detail::ammv_form(sig, idx.eps[j] * idx.eps[j - 1]);
      if (sig == -1 && idx.eps[j] == 1 && idx.eps[j - 1] == -1) {
        P1Comb neg(4);
        for (auto& [w, c] : form.terms) neg.add(w, -c);
        form = neg;
      }
    }
    out = concat(out, form);
    for (int r = 1; r < idx.k[j]; ++r) out = concat(out, zero);
  }
  for (auto& [w, c] : out.terms)
    if (w.front().is_zero() || w.back() == Cyc(4, 1))
      throw std::logic_error("ammv_word: divergent term " + p1_word_key(w));
  return out;
}

inline ApproxR ammv_eval(const AmmvIndex& idx, const Context& ctx) {
  ApproxC v = eval_p1_comb(ammv_word(idx), ctx);
  if (!(Bound::abs_of(v.im) <= v.err))
    throw NumericError("ammv_eval: imaginary residual " + v.im.to_string(6) + " exceeds error bound");
  return v.real_part();
}

inline mpz_class ammv_dim_bound(int k) {
  if (k < 0) throw UsageError("ammv_dim_bound: k must be >= 0");
  return mpz_class(1) << k;
}

}  // namespace itercurve

#endif
