#ifndef ITERCURVE_DESCENT_HPP
#define ITERCURVE_DESCENT_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "words.hpp"

namespace itercurve {

// A point of P^1 used as a letter e_a = dl/(l - a).
using P1Letter = Cyc;
using P1Word = std::vector<P1Letter>;

struct P1Term {
  Cyc coeff;
  P1Word letters;
};

// Formal sum of P1 words with Q(xi_N) coefficients, all at one level.
struct P1Comb {
  int level = 4;
  std::map<P1Word, Cyc> terms;

  P1Comb() = default;
  explicit P1Comb(int n) : level(n) {}

  void add(const P1Word& w, const Cyc& c) {
    if (c.is_zero()) return;
    if (c.level != level) throw UsageError("P1Comb: coefficient level mismatch");
    auto [it, inserted] = terms.emplace(w, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  size_t size() const { return terms.size(); }
  std::vector<P1Term> list() const {
    std::vector<P1Term> out;
    for (auto& [w, c] : terms) out.push_back({c, w});
    return out;
  }
};

inline bool operator==(const P1Comb& x, const P1Comb& y) { return x.level == y.level && x.terms == y.terms; }

namespace letters {
inline Cyc zero(int n) { return Cyc(n, 0); }
inline Cyc one(int n) { return Cyc(n, 1); }
inline Cyc i() { return Cyc(4, 0, 1); }
inline Cyc minus_i() { return Cyc(4, 0, -1); }
inline Cyc minus_two() { return Cyc(6, -2); }
inline Cyc xi3() { return Cyc(6, -1, 1); }   // xi_6^2 = xi_6 - 1
inline Cyc xi3c() { return Cyc(6, 0, -1); }  // xi_3^{-1} = -xi_6
inline Cyc sqrt_m3() { return Cyc(6, -1, 2); }  // sqrt(-3) = 2 xi_6 - 1
}  // namespace letters

// Short names "0","1","-2","i","-i","z3","z3c"; other points print as Cyc text.
inline std::string p1_letter_name(const P1Letter& a) {
  if (a.is_rational()) return a.a.get_str();
  if (a.level == 4 && a == letters::i()) return "i";
  if (a.level == 4 && a == letters::minus_i()) return "-i";
  if (a.level == 6 && a == letters::xi3()) return "z3";
  if (a.level == 6 && a == letters::xi3c()) return "z3c";
  return to_string(a);
}

inline P1Letter parse_p1_letter(const std::string& s, int level) {
  if (s == "i") return Cyc(4, 0, 1);
  if (s == "-i") return Cyc(4, 0, -1);
  if (s == "z3") return letters::xi3();
  if (s == "z3c") return letters::xi3c();
  Cyc c = parse_cyc(s, level);
  if (c.is_rational()) c.level = level;
  return c;
}

inline std::string p1_word_key(const P1Word& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + p1_letter_name(w[i]);
  return s;
}

// Substitution theta of a curve letter into P1 letters (rational partial fractions).
inline P1Comb theta(const CurveLetter& l) {
  using namespace letters;
  if (l.curve == Curve::g) {
    P1Comb c(4);
    Cyc o(4, 1), m(4, -1);
    switch (l.index) {
      case 0:
        c.add({zero(4)}, o); c.add({i()}, m); c.add({minus_i()}, m);
        break;
      case 1:
        c.add({one(4)}, Cyc(4, -2)); c.add({i()}, o); c.add({minus_i()}, o);
        break;
      case 2: {
        Cyc xi_inv = inv(Cyc::xi(4));
        c.add({i()}, xi_inv); c.add({minus_i()}, -xi_inv);
        break;
      }
      case 3:
        c.add({zero(4)}, o);
        break;
    }
    return c;
  }
  P1Comb c(6);
  Cyc o(6, 1), m(6, -1), half(6, Rat(1, 2));
  switch (l.index) {
    case 0:
      c.add({zero(6)}, o); c.add({minus_two()}, o); c.add({xi3()}, m); c.add({xi3c()}, m);
      break;
    case 1:
      c.add({one(6)}, m); c.add({xi3()}, o); c.add({xi3c()}, o);
      break;
    case 4: {
      Cyc r = inv(sqrt_m3());
      c.add({xi3()}, r); c.add({xi3c()}, -r);
      break;
    }
    case 5:
      c.add({zero(6)}, half); c.add({minus_two()}, -half);
      break;
    case 6:
      c.add({one(6)}, m);
      break;
  }
  return c;
}

// Concatenation product of P1 combinations.
inline P1Comb concat(const P1Comb& x, const P1Comb& y) {
  if (x.level != y.level) throw UsageError("concat: level mismatch");
  P1Comb out(x.level);
  for (auto& [u, p] : x.terms)
    for (auto& [v, q] : y.terms) {
      P1Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add(w, p * q);
    }
  return out;
}

// Multilinear expansion theta(eta_1) ... theta(eta_k).
inline P1Comb pullback_word(const CurveWord& w) {
  if (!is_admissible(w)) throw UsageError("pullback_word: word " + w.to_string() + " is not admissible");
  int n = curve_level(w.curve);
  P1Comb out(n);
  out.add({}, Cyc(n, 1));
  for (int p = 0; p < w.weight(); ++p) out = concat(out, theta(w.letter(p)));
  for (auto& [letters_, c] : out.terms) {
    if (letters_.empty()) continue;
    if (letters_.front().is_zero() || letters_.back() == Cyc(n, 1))
      throw std::logic_error("pullback_word: divergent term " + p1_word_key(letters_));
  }
  return out;
}

// Nontrivial automorphism applied to letters and coefficients.
inline P1Comb galois_sigma(const P1Comb& x) {
  P1Comb out(x.level);
  for (auto& [w, c] : x.terms) {
    P1Word s;
    for (auto& a : w) s.push_back(conj(a));
    out.add(s, conj(c));
  }
  return out;
}

inline bool is_invariant(const P1Comb& x) { return galois_sigma(x) == x; }

// Shuffle product of P1 combinations.
inline P1Comb shuffle(const P1Comb& x, const P1Comb& y) {
  if (x.level != y.level) throw UsageError("shuffle: level mismatch");
  P1Comb out(x.level);
  for (auto& [u, p] : x.terms)
    for (auto& [v, q] : y.terms)
      for (auto& [w, m] : shuffle_sequences(u, v)) out.add(w, p * q * Rat(m));
  return out;
}

// Parity of the number of w2 (g) or w4 (h) letters. Also checks that every
// pullback coefficient lies in Q * xi_4^{-#w2} (g) or Q * sqrt(-3)^{-#w4} (h).
inline int parity_component(const CurveWord& w) {
  if (!is_admissible(w)) throw UsageError("parity_component: word is not admissible");
  int special = w.curve == Curve::g ? 2 : 4;
  int count = static_cast<int>(std::count(w.letters.begin(), w.letters.end(), special));
  Cyc unit = w.curve == Curve::g ? Cyc::xi(4) : letters::sqrt_m3();
  Cyc twist = cyc_pow(unit, count);
  for (auto& [ls, c] : pullback_word(w).terms)
    if (!(c * twist).is_rational())
      throw std::logic_error("parity_component: coefficient " + to_string(c) + " outside the expected Q-line");
  return count % 2;
}

// Sign s with sigma(u_k) = s u_k for u_k = I(0; xi, 0^{k-1}; 1) - (-1)^k I(0; xi^{-1}, 0^{k-1}; 1),
// xi = xi_4 (g) or xi_3 (h).
inline int basis_sign(int k, Curve curve) {
  if (k < 1) throw UsageError("basis_sign: k must be >= 1");
  int n = curve_level(curve);
  Cyc xi = curve == Curve::g ? letters::i() : letters::xi3();
  P1Word a{xi}, b{inv(xi)};
  for (int j = 1; j < k; ++j) {
    a.push_back(Cyc(n, 0));
    b.push_back(Cyc(n, 0));
  }
  P1Comb u(n);
  u.add(a, Cyc(n, 1));
  u.add(b, Cyc(n, k % 2 == 0 ? -1 : 1));
  P1Comb s = galois_sigma(u);
  if (s == u) return 1;
  P1Comb neg(n);
  for (auto& [w, c] : u.terms) neg.add(w, -c);
  if (s == neg) return -1;
  throw std::logic_error("basis_sign: sigma(u_k) is not +-u_k");
}

}  // namespace itercurve

#endif
