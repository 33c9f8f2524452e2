#ifndef NCCOUNT_NUMERIC_HPP
#define NCCOUNT_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace nccount {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// ~100 decimal digits; root enclosures are rational and can be made as
// narrow as needed, so this only has to dominate the reported precision.
using Real = boost::multiprecision::cpp_bin_float_100;

inline Real pi_value() { return boost::math::constants::pi<Real>(); }

inline Real to_real(const Rational& q) {
  return Real(numerator(q)) / Real(denominator(q));
}
inline Real to_real(const Int& n) { return Real(n); }

inline Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

// C(n, k) with the usual convention: 0 whenever k < 0 or k > n or n < 0.
inline Int binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long long i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

// Binary entropy H(x) = -x log2 x - (1-x) log2 (1-x), H(0) = H(1) = 0.
inline double entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

inline Real entropy(const Real& x) {
  if (x <= 0 || x >= 1) return Real(0);
  const Real l2 = boost::math::constants::ln_two<Real>();
  return (-x * log(x) - (1 - x) * log(1 - x)) / l2;
}

inline Real log2_real(const Real& x) {
  return log(x) / boost::math::constants::ln_two<Real>();
}

// log2 of a (large) positive integer, accurate enough for entropy checks.
inline Real log2_int(const Int& n) {
  if (n <= 0) throw std::domain_error("log2_int: nonpositive argument");
  return log2_real(Real(n));
}

// Deterministic decimal rendering with a fixed number of significant digits.
std::string format_real(const Real& x, unsigned digits = 10);

// Renders a rational as "p" or "p/q" in lowest terms.
inline std::string format_rational(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace nccount

#endif
