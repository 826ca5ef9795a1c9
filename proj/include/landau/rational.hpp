#ifndef LANDAU_RATIONAL_HPP
#define LANDAU_RATIONAL_HPP

#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace landau::exact {

// Arbitrary-precision rationals for the boundary cases where floating point
// cannot decide a sign: decomposition coefficients of vectors sitting exactly
// on a cone facet, and the gamma_max of the counterexample cosine blocks.
using Rational = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

/// Exact conversion: every finite double is m * 2^e for integers m, e.
inline Rational from_double(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("from_double: value is not finite");
  }
  if (x == 0.0) return Rational(0);
  int e = 0;
  const double m = std::frexp(x, &e);  // x = m * 2^e, 0.5 <= |m| < 1
  const auto mant = static_cast<long long>(std::ldexp(m, 53));
  e -= 53;
  Rational r(mant);
  if (e > 0) {
    r *= Rational(Int(1) << e);
  } else if (e < 0) {
    r /= Rational(Int(1) << -e);
  }
  return r;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational pow_int(const Rational& base, int e) {
  Rational acc(1);
  Rational b = base;
  int n = e >= 0 ? e : -e;
  for (; n > 0; n >>= 1) {
    if (n & 1) acc *= b;
    b *= b;
  }
  if (e < 0) {
    if (acc == 0) throw std::invalid_argument("pow_int: zero base with negative exponent");
    return Rational(1) / acc;
  }
  return acc;
}

}  // namespace landau::exact

#endif  // LANDAU_RATIONAL_HPP
