#ifndef ITERCURVE_COMMON_HPP
#define ITERCURVE_COMMON_HPP

#include <stdexcept>
#include <string>

namespace itercurve {

// Bad arguments or inputs outside an operation's domain (CLI exit code 1).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Convergence, precision or realness failures (CLI exit code 2).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An identity that should hold numerically or exactly did not (CLI exit code 3).
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Curve { g, h };

inline const char* curve_name(Curve c) { return c == Curve::g ? "g" : "h"; }

inline Curve parse_curve(const std::string& s) {
  if (s == "g") return Curve::g;
  if (s == "h") return Curve::h;
  throw UsageError("unknown curve '" + s + "' (expected g or h)");
}

// Coefficient field Q(xi_N) attached to each curve.
inline int curve_level(Curve c) { return c == Curve::g ? 4 : 6; }

}  // namespace itercurve

#endif
