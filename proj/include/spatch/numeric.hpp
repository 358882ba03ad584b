#pragma once

#include <gmpxx.h>

#include <cmath>
#include <concepts>
#include <string>

namespace spatch {

// Exact rational scalar backed by GMP. Arithmetic keeps results canonical
// (lowest terms, positive denominator); construct via rat() so raw
// numerator/denominator input is canonicalized as well.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// The two numeric modes of the kernel. All algebra is templated on the
// scalar; mixing modes in one expression is therefore a type error.
// Derivation and certification paths run on Rational, geometry and meshing
// on double.
template <class S>
concept Scalar = std::same_as<S, double> || std::same_as<S, Rational>;

template <Scalar S>
inline constexpr bool is_rational_v = std::same_as<S, Rational>;

template <Scalar S>
S scalar_of(long v) {
  if constexpr (is_rational_v<S>)
    return Rational(v);
  else
    return static_cast<double>(v);
}

inline double to_double(double v) { return v; }
inline double to_double(const Rational& v) { return v.get_d(); }

inline bool is_zero(double v) { return v == 0.0; }
inline bool is_zero(const Rational& v) { return sgn(v) == 0; }

inline double abs_of(double v) { return std::fabs(v); }
inline Rational abs_of(const Rational& v) { return Rational(abs(v)); }

template <Scalar S>
S max_of(const S& a, const S& b) {
  return a < b ? b : a;
}

inline std::string to_string(double v) { return std::to_string(v); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

}  // namespace spatch
