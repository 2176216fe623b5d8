#ifndef ITERCURVE_ORACLE_HPP
#define ITERCURVE_ORACLE_HPP

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "eval.hpp"

namespace itercurve {

using cld = std::complex<long double>;

inline cld to_cld(const Cyc& x) {
  long double a = x.a.get_d(), b = x.b.get_d();
  if (x.level == 4) return {a, b};
  return {a + b / 2, b * std::sqrt(3.0L) / 2};
}

// Straight chord dch_{p,q} or arc C_c(q1, q2) around c, swept through the
// principal angle arg((q2-c)/(q1-c)).
struct Segment {
  enum Kind { chord, arc } kind = chord;
  cld p, q;    // start and end points
  cld center;  // arcs only
  long double r = 0, theta0 = 0, dtheta = 0;

  static Segment make_chord(cld p, cld q) {
    Segment s;
    s.kind = chord;
    s.p = p;
    s.q = q;
    return s;
  }
  static Segment make_arc(cld c, cld q1, cld q2) {
    long double r1 = std::abs(q1 - c), r2 = std::abs(q2 - c);
    if (r1 == 0 || std::abs(r1 - r2) > 1e-15L * std::max(1.0L, r1))
      throw UsageError("arc endpoints must be equidistant from the center");
    Segment s;
    s.kind = arc;
    s.center = c;
    s.r = r1;
    s.theta0 = std::arg(q1 - c);
    s.dtheta = std::arg((q2 - c) / (q1 - c));
    s.p = q1;
    s.q = q2;
    return s;
  }
  // Points are addressed by tau = t (from_end false) or tau = 1 - t, and
  // returned as offset from that endpoint so that gamma - a keeps full
  // relative accuracy next to a pole sitting at the endpoint.
  cld ref(bool from_end) const { return from_end ? q : p; }
  cld offset(long double tau, bool from_end) const {
    if (kind == chord) return from_end ? -tau * (q - p) : tau * (q - p);
    long double th0 = from_end ? theta0 + dtheta : theta0;
    long double x = from_end ? -tau * dtheta : tau * dtheta;
    // r e^{i th0} (e^{ix} - 1) with e^{ix} - 1 = 2i sin(x/2) e^{ix/2}
    return std::polar(r, th0) * cld(0, 2 * std::sin(x / 2)) * std::polar(1.0L, x / 2);
  }
  cld at(long double tau, bool from_end) const { return ref(from_end) + offset(tau, from_end); }
  // gamma(t) - a
  cld minus(long double tau, bool from_end, cld a) const { return (ref(from_end) - a) + offset(tau, from_end); }
  // d gamma / dt
  cld velocity(long double tau, bool from_end) const {
    if (kind == chord) return q - p;
    long double th = from_end ? theta0 + dtheta - tau * dtheta : theta0 + tau * dtheta;
    return cld(0, dtheta) * std::polar(r, th);
  }
  long double length() const { return kind == chord ? std::abs(q - p) : r * std::abs(dtheta); }
  Segment reversed() const {
    if (kind == chord) return make_chord(q, p);
    Segment s = *this;
    s.theta0 = theta0 + dtheta;
    s.dtheta = -dtheta;
    s.p = q;
    s.q = p;
    return s;
  }
};

struct PathSpec {
  std::vector<Segment> segments;

  static PathSpec chord(cld p, cld q) { return PathSpec{{Segment::make_chord(p, q)}}; }
  PathSpec& then(const Segment& s) {
    if (!segments.empty() && std::abs(segments.back().q - s.p) > 1e-15L)
      throw UsageError("path segments do not join");
    segments.push_back(s);
    return *this;
  }
  cld start() const { return segments.front().p; }
  cld end() const { return segments.back().q; }
  PathSpec reversed() const {
    PathSpec out;
    for (auto it = segments.rbegin(); it != segments.rend(); ++it) out.segments.push_back(it->reversed());
    return out;
  }
};

struct QuadResult {
  cld value;
  long double err;  // refinement-agreement estimate, not a proof
};

namespace detail {

// Gauss-Legendre rule on [-1,1] with its cumulative integration matrix
// S[i][j] = weight of f(x_j) in the integral of the interpolant over [-1, x_i].
struct GLRule {
  static constexpr int n = 20;
  long double x[n], w[n], S[n][n];

  GLRule() {
    using G = boost::math::quadrature::gauss<long double, n>;
    const auto& ab = G::abscissa();
    const auto& wt = G::weights();
    int m = 0;
    for (size_t i = ab.size(); i-- > 0;)
      if (ab[i] != 0) {
        x[m] = -ab[i];
        w[m++] = wt[i];
      }
    for (size_t i = 0; i < ab.size(); ++i) {
      x[m] = ab[i];
      w[m++] = wt[i];
    }
    // Interpolant coefficients in the Legendre basis are exact discrete
    // projections; integrate P_l via (P_{l+1} - P_{l-1}) / (2l+1).
    long double P[n][n + 1];
    for (int i = 0; i < n; ++i) {
      P[i][0] = 1;
      P[i][1] = x[i];
      for (int l = 1; l < n; ++l) P[i][l + 1] = ((2 * l + 1) * x[i] * P[i][l] - l * P[i][l - 1]) / (l + 1);
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long double s = 0;
        for (int l = 0; l < n; ++l) {
          long double integral = l == 0 ? x[i] + 1 : (P[i][l + 1] - P[i][l - 1]) / (2 * l + 1);
          s += (2 * l + 1) / 2.0L * w[j] * P[j][l] * integral;
        }
        S[i][j] = s;
      }
  }
  static const GLRule& get() {
    static const GLRule rule;
    return rule;
  }
};

struct Panel {
  const Segment* seg;
  bool from_end;
  long double a, b;  // tau range, traversed from a to b
};

// Panels shrink geometrically toward poles (at ratio panel length < dist/2).
// Refinement stops at parameter width 1e-25: the piece of that width that
// touches a pole at a path endpoint is left out (endpoint inset). Its
// contribution is O(1e-25 |log 1e-25|^k) and is not corrected for.
constexpr long double kInset = 1e-25L;

inline void build_panels(const Segment& s, bool from_end, long double a, long double b, const std::vector<cld>& poles,
                         std::vector<Panel>& out) {
  long double len = std::abs(b - a) * s.length();
  long double d = INFINITY;
  for (auto& z : poles) d = std::min(d, std::abs(s.minus((a + b) / 2, from_end, z)));
  if (std::abs(b - a) > kInset && len > d / 2) {
    long double m = (a + b) / 2;
    build_panels(s, from_end, a, m, poles, out);
    build_panels(s, from_end, m, b, poles, out);
    return;
  }
  out.push_back({&s, from_end, a, b});
}

inline bool touches_pole(const Panel& P, const std::vector<cld>& poles) {
  for (auto& z : poles)
    if (std::abs(P.seg->minus(P.a, P.from_end, z)) < 1e-14L || std::abs(P.seg->minus(P.b, P.from_end, z)) < 1e-14L)
      return true;
  return false;
}

inline std::vector<Panel> make_panels(const PathSpec& path, const std::vector<cld>& poles, bool refine) {
  std::vector<Panel> out;
  for (auto& s : path.segments) {
    // first half measured from the start, second half from the end (traversed backwards in tau)
    std::vector<Panel> first, second;
    for (int q = 0; q < 4; ++q) build_panels(s, false, q / 8.0L, (q + 1) / 8.0L, poles, first);
    for (int q = 3; q >= 0; --q) build_panels(s, true, (q + 1) / 8.0L, q / 8.0L, poles, second);
    out.insert(out.end(), first.begin(), first.end());
    out.insert(out.end(), second.begin(), second.end());
  }
  if (!refine) return out;
  std::vector<Panel> halved;
  for (auto& p : out) {
    long double m = (p.a + p.b) / 2;
    halved.push_back({p.seg, p.from_end, p.a, m});
    halved.push_back({p.seg, p.from_end, m, p.b});
  }
  return halved;
}

// Iterated integral of dz/(z - a_1) ... dz/(z - a_k) over the panels.
inline cld iterate_on_panels(const std::vector<Panel>& panels, const std::vector<cld>& letters,
                             const std::vector<cld>& poles, bool analytic_first) {
  const GLRule& R = GLRule::get();
  const int n = GLRule::n;
  size_t k = letters.size();
  std::vector<cld> F(k + 1, cld(0));
  F[0] = 1;
  cld z0 = panels.front().seg->p;
  std::vector<std::vector<cld>> G(k + 1, std::vector<cld>(n));
  for (size_t pi = 0; pi < panels.size(); ++pi) {
    const Panel& P = panels[pi];
    long double h = (P.b - P.a) / 2 * (P.from_end ? -1 : 1);
    bool inset = std::abs(P.b - P.a) <= kInset && (pi == 0 || pi + 1 == panels.size()) && touches_pole(P, poles);
    if (inset) continue;
    cld om[n];
    for (size_t j = 1; j <= k; ++j) {
      for (int i = 0; i < n; ++i) {
        long double tau = P.a + (R.x[i] + 1) / 2 * (P.b - P.a);
        om[i] = P.seg->velocity(tau, P.from_end) / P.seg->minus(tau, P.from_end, letters[j - 1]) * h;
        if (j == 1 && analytic_first) G[1][i] = std::log(P.seg->minus(tau, P.from_end, letters[0]) / (z0 - letters[0]));
      }
      if (!(j == 1 && analytic_first)) {
        for (int i = 0; i < n; ++i) {
          cld s = F[j];
          for (int m = 0; m < n; ++m) s += R.S[i][m] * om[m] * (j == 1 ? cld(1) : G[j - 1][m]);
          G[j][i] = s;
        }
      }
      cld tot = 0;
      for (int m = 0; m < n; ++m) tot += R.w[m] * om[m] * (j == 1 ? cld(1) : G[j - 1][m]);
      F[j] += tot;
    }
  }
  return F[k];
}

}  // namespace detail

// Nested Gauss-Legendre evaluation of I_path(start; a_1, ..., a_k; end),
// error estimated by agreement with a uniformly bisected panel set.
inline QuadResult quad_iterated_ld(const PathSpec& path, const std::vector<cld>& letters) {
  if (path.segments.empty()) throw UsageError("quad_iterated: empty path");
  if (letters.size() > 4) throw UsageError("quad_iterated: weight above 4");
  if (letters.empty()) return {1, 0};
  cld a = path.start(), b = path.end();
  if (std::abs(letters.front() - a) < 1e-14L || std::abs(letters.back() - b) < 1e-14L)
    throw UsageError("quad_iterated: nonconvergent endpoint configuration");
  for (size_t s = 0; s < path.segments.size(); ++s) {
    const Segment& seg = path.segments[s];
    for (auto& z : letters) {
      // closest approach on the open segment
      long double d = INFINITY;
      if (seg.kind == Segment::chord) {
        cld v = seg.q - seg.p;
        long double t = std::real((z - seg.p) * std::conj(v)) / std::norm(v);
        if (t > 0 && t < 1) d = std::abs(seg.p + t * v - z);
      } else {
        long double rho = std::abs(z - seg.center);
        long double ang = std::arg((z - seg.center) / std::polar(1.0L, seg.theta0));
        long double rel = ang / seg.dtheta;
        if (rel > 0 && rel < 1) d = std::abs(rho - seg.r);
      }
      bool at_joint = (s > 0 && std::abs(z - seg.p) < 1e-14L);
      if (d < 1e-14L || at_joint) throw UsageError("quad_iterated: pole on path");
    }
  }
  std::vector<cld> poles = letters;
  bool single_chord = path.segments.size() == 1 && path.segments[0].kind == Segment::chord;
  cld coarse = detail::iterate_on_panels(detail::make_panels(path, poles, false), letters, poles, single_chord);
  cld fine = detail::iterate_on_panels(detail::make_panels(path, poles, true), letters, poles, single_chord);
  return {fine, std::abs(fine - coarse)};
}

inline ApproxC to_approx(const QuadResult& r) {
  return {Real(static_cast<double>(r.value.real()), 64), Real(static_cast<double>(r.value.imag()), 64),
          Bound(static_cast<double>(r.err) + 1e-18)};
}

inline QuadResult quad_iterated_ld(const PathSpec& path, const P1Word& letters) {
  std::vector<cld> ls;
  for (auto& a : letters) ls.push_back(to_cld(a));
  return quad_iterated_ld(path, ls);
}

inline ApproxC quad_iterated(const PathSpec& path, const P1Word& letters, const Context& ctx_low) {
  if (ctx_low.precision_digits > 30) throw UsageError("quad_iterated: oracle precision is capped at 30 digits");
  return to_approx(quad_iterated_ld(path, letters));
}

// Curve word value through quadrature of every pulled-back P1 word along [0,1].
inline QuadResult quad_curve_word(const CurveWord& w) {
  if (w.letters.empty()) return {1, 0};
  QuadResult out{0, 0};
  PathSpec path = PathSpec::chord(0, 1);
  for (auto& [ls, c] : pullback_word(w).terms) {
    QuadResult q = quad_iterated_ld(path, ls);
    cld coeff = to_cld(c);
    out.value += coeff * q.value;
    out.err += std::abs(coeff) * q.err;
  }
  return out;
}

// Single integral of f(z) dz along a path, same panels and error estimate.
inline QuadResult quad_path_integral(const PathSpec& path, const std::function<cld(cld)>& f,
                                     const std::vector<cld>& singular_points) {
  const detail::GLRule& R = detail::GLRule::get();
  auto run = [&](bool refine) {
    cld tot = 0;
    auto panels = detail::make_panels(path, singular_points, refine);
    for (size_t pi = 0; pi < panels.size(); ++pi) {
      auto& P = panels[pi];
      if (std::abs(P.b - P.a) <= detail::kInset && detail::touches_pole(P, singular_points)) continue;
      long double h = (P.b - P.a) / 2 * (P.from_end ? -1 : 1);
      for (int i = 0; i < detail::GLRule::n; ++i) {
        long double tau = P.a + (R.x[i] + 1) / 2 * (P.b - P.a);
        tot += R.w[i] * h * f(P.seg->at(tau, P.from_end)) * P.seg->velocity(tau, P.from_end);
      }
    }
    return tot;
  };
  cld coarse = run(false), fine = run(true);
  return {fine, std::abs(fine - coarse)};
}

struct ArcLemmaResult {
  cld lhs1, rhs1, lhs2, rhs2;
  long double quad_err1, quad_err2;
  double residual1, residual2;
};

// Both sides of
//   int_gamma log(1-z)/z dz = -Li_2(z0) + (pi i/2) log z0 + pi^2/6,
//   int_gamma log(1+z)/z dz = -Li_2(-z0) - pi^2/12,
// gamma = C_0(1, z0), principal logarithms. Left sides by quadrature, right
// sides from the series evaluator.
inline ArcLemmaResult verify_arc_lemma(const Cyc& z0, const Context& ctx_low) {
  if (ctx_low.precision_digits > 30) throw UsageError("verify_arc_lemma: oracle precision is capped at 30 digits");
  if (z0.is_zero() || abs2(z0) != 1) throw UsageError("verify_arc_lemma: |z0| must be 1");
  cld z = to_cld(z0);
  if (z.real() < -1e-18L) throw UsageError("verify_arc_lemma: need -pi/2 <= arg z0 <= pi/2");
  const long double pi = std::acos(-1.0L);
  ArcLemmaResult r{};
  auto to_c = [](const ApproxC& x) { return cld(x.re.to_double(), x.im.to_double()); };
  cld li_p = to_c(polylog_root(2, z0, ctx_low));
  cld li_m = to_c(polylog_root(2, -z0, ctx_low));
  cld log_z0(0, std::arg(z));
  r.rhs1 = -li_p + cld(0, pi / 2) * log_z0 + pi * pi / 6;
  r.rhs2 = -li_m - pi * pi / 12;
  if (std::abs(z - cld(1)) < 1e-18L) {
    r.lhs1 = r.lhs2 = 0;
  } else {
    PathSpec arc{{Segment::make_arc(0, 1, z)}};
    QuadResult q1 = quad_path_integral(arc, [](cld u) { return std::log(cld(1) - u) / u; }, {cld(1)});
    QuadResult q2 = quad_path_integral(arc, [](cld u) { return std::log(cld(1) + u) / u; }, {cld(-1)});
    r.lhs1 = q1.value;
    r.lhs2 = q2.value;
    r.quad_err1 = q1.err;
    r.quad_err2 = q2.err;
  }
  r.residual1 = static_cast<double>(std::abs(r.lhs1 - r.rhs1));
  r.residual2 = static_cast<double>(std::abs(r.lhs2 - r.rhs2));
  return r;
}

}  // namespace itercurve

#endif
