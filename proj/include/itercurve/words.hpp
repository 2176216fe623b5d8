#ifndef ITERCURVE_WORDS_HPP
#define ITERCURVE_WORDS_HPP

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "exactfield.hpp"

namespace itercurve {

inline const std::vector<int>& alphabet(Curve c) {
  static const std::vector<int> g{0, 1, 2, 3};
  static const std::vector<int> h{0, 1, 4, 5, 6};
  return c == Curve::g ? g : h;
}

inline bool letter_legal(Curve c, int index) {
  const auto& a = alphabet(c);
  return std::find(a.begin(), a.end(), index) != a.end();
}

struct CurveLetter {
  Curve curve = Curve::g;
  int index = 0;

  CurveLetter() = default;
  CurveLetter(Curve c, int i) : curve(c), index(i) {
    if (!letter_legal(c, i))
      throw UsageError("letter w" + std::to_string(i) + " is not in the alphabet of curve " + curve_name(c));
  }
};

struct CurveWord {
  Curve curve = Curve::g;
  std::vector<int> letters;

  CurveWord() = default;
  CurveWord(Curve c, std::vector<int> ls) : curve(c), letters(std::move(ls)) {
    for (int i : letters) CurveLetter(c, i);
  }
  int weight() const { return static_cast<int>(letters.size()); }
  CurveLetter letter(int p) const { return {curve, letters.at(p)}; }
  std::string to_string() const {
    std::string s;
    for (size_t i = 0; i < letters.size(); ++i) s += (i ? "," : "") + std::to_string(letters[i]);
    return s;
  }
};

inline bool operator==(const CurveWord& x, const CurveWord& y) { return x.curve == y.curve && x.letters == y.letters; }
inline bool operator<(const CurveWord& x, const CurveWord& y) {
  if (x.curve != y.curve) return x.curve < y.curve;
  if (x.letters.size() != y.letters.size()) return x.letters.size() < y.letters.size();
  return x.letters < y.letters;
}

// Formal Q-linear combination of words; zero coefficients are never stored.
using WordComb = std::map<CurveWord, Rat>;

inline void add_term(WordComb& c, const CurveWord& w, const Rat& q) {
  if (q == 0) return;
  auto [it, inserted] = c.emplace(w, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) c.erase(it);
  }
}

// Integers separated by commas and/or blanks, e.g. "4,4,0" or "2 3 3".
inline CurveWord parse_word(const std::string& text, Curve curve) {
  std::string t = text;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream in(t);
  std::vector<int> ls;
  std::string tok;
  while (in >> tok) {
    size_t pos = 0;
    int v;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw UsageError("bad letter token '" + tok + "'");
    }
    if (pos != tok.size()) throw UsageError("bad letter token '" + tok + "'");
    ls.push_back(v);
  }
  return CurveWord(curve, ls);
}

// Membership in B_f^(k): g forbids a leading w0 or w3 and a trailing w1;
// h forbids a leading w0 or w5 and a trailing w1 or w6. The empty word
// counts as admissible (weight 0, value 1).
inline bool is_admissible(const CurveWord& w) {
  if (w.letters.empty()) return true;
  int first = w.letters.front(), last = w.letters.back();
  if (w.curve == Curve::g) return first != 0 && first != 3 && last != 1;
  return first != 0 && first != 5 && last != 1 && last != 6;
}

// Admissible words of weight k in lexicographic order of letter indices.
inline std::vector<CurveWord> enumerate_admissible(Curve curve, int k) {
  if (k < 1) throw UsageError("enumerate_admissible: k must be >= 1");
  const auto& a = alphabet(curve);
  std::vector<CurveWord> out;
  std::vector<size_t> idx(k, 0);
  while (true) {
    CurveWord w;
    w.curve = curve;
    for (size_t i : idx) w.letters.push_back(a[i]);
    if (is_admissible(w)) out.push_back(std::move(w));
    int p = k - 1;
    while (p >= 0 && ++idx[p] == a.size()) idx[p--] = 0;
    if (p < 0) break;
  }
  return out;
}

// Shuffle product on sequences over any ordered letter type; returns each
// interleaving with its multiplicity.
template <class Letter>
std::map<std::vector<Letter>, long> shuffle_sequences(const std::vector<Letter>& u, const std::vector<Letter>& v) {
  std::map<std::vector<Letter>, long> out;
  if (u.empty() || v.empty()) {
    out[u.empty() ? v : u] = 1;
    return out;
  }
  // u ш v = u1 (u' ш v) + v1 (u ш v')
  std::vector<Letter> u_tail(u.begin() + 1, u.end()), v_tail(v.begin() + 1, v.end());
  for (auto& [w, m] : shuffle_sequences(u_tail, v)) {
    std::vector<Letter> x{u.front()};
    x.insert(x.end(), w.begin(), w.end());
    out[x] += m;
  }
  for (auto& [w, m] : shuffle_sequences(u, v_tail)) {
    std::vector<Letter> x{v.front()};
    x.insert(x.end(), w.begin(), w.end());
    out[x] += m;
  }
  return out;
}

inline WordComb shuffle(const CurveWord& u, const CurveWord& v) {
  if (u.curve != v.curve) throw UsageError("shuffle: curve mismatch");
  WordComb out;
  for (auto& [w, m] : shuffle_sequences(u.letters, v.letters)) add_term(out, CurveWord{u.curve, w}, Rat(m));
  return out;
}

inline WordComb shuffle(const WordComb& x, const WordComb& y) {
  WordComb out;
  for (auto& [u, p] : x)
    for (auto& [v, q] : y)
      for (auto& [w, m] : shuffle(u, v)) add_term(out, w, p * q * m);
  return out;
}

}  // namespace itercurve

#endif
