#ifndef NCCOUNT_SERIES_HPP
#define NCCOUNT_SERIES_HPP

#include "nccount/numeric.hpp"

#include <optional>
#include <utility>

namespace nccount {

// ---------------------------------------------------------------------------
// Coefficient rings.  Truncated-series code is generic over the ring so the
// same solver handles univariate series (rational coefficients) and bivariate
// series (coefficients that are polynomials in the component-marking variable
// w).  All arithmetic is exact.
// ---------------------------------------------------------------------------

struct RationalRing {
  using value = Rational;
  static value zero() { return value(0); }
  static value one() { return value(1); }
  static bool is_zero(const value& a) { return a == 0; }
  static value add(const value& a, const value& b) { return a + b; }
  static value sub(const value& a, const value& b) { return a - b; }
  static value mul(const value& a, const value& b) { return a * b; }
  static value neg(const value& a) { return -a; }
  static std::optional<value> exact_div(const value& a, const value& b) {
    if (b == 0) return std::nullopt;
    return a / b;
  }
};

// Dense polynomial in w over the rationals; trailing zeros trimmed.
struct WPoly {
  std::vector<Rational> c;

  WPoly() = default;
  explicit WPoly(Rational a) { if (a != 0) c.push_back(std::move(a)); }
  static WPoly monomial(const Rational& a, int deg) {
    WPoly p;
    if (a != 0) {
      p.c.assign(deg + 1, Rational(0));
      p.c[deg] = a;
    }
    return p;
  }

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool zero() const { return c.empty(); }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  Rational coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c.size())) return Rational(0);
    return c[k];
  }
  Rational eval(const Rational& w) const {
    Rational r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * w + *it;
    return r;
  }
  Real eval(const Real& w) const {
    Real r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * w + to_real(*it);
    return r;
  }

  friend WPoly operator+(const WPoly& a, const WPoly& b) {
    WPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
  }
  friend WPoly operator-(const WPoly& a, const WPoly& b) {
    WPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
  }
  friend WPoly operator*(const WPoly& a, const WPoly& b) {
    WPoly r;
    if (a.zero() || b.zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i] == 0) continue;
      for (size_t j = 0; j < b.c.size(); ++j)
        if (b.c[j] != 0) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
  }
  friend WPoly operator-(const WPoly& a) {
    WPoly r = a;
    for (auto& x : r.c) x = -x;
    return r;
  }
  friend bool operator==(const WPoly& a, const WPoly& b) { return a.c == b.c; }
};

struct WPolyRing {
  using value = WPoly;
  static value zero() { return WPoly(); }
  static value one() { return WPoly(Rational(1)); }
  static bool is_zero(const value& a) { return a.zero(); }
  static value add(const value& a, const value& b) { return a + b; }
  static value sub(const value& a, const value& b) { return a - b; }
  static value mul(const value& a, const value& b) { return a * b; }
  static value neg(const value& a) { return -a; }
  // Exact polynomial division; nullopt if b = 0 or the remainder is nonzero.
  static std::optional<value> exact_div(const value& a, const value& b) {
    if (b.zero()) return std::nullopt;
    if (a.zero()) return WPoly();
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<Rational> rem = a.c;
    std::vector<Rational> q(a.degree() - b.degree() + 1, Rational(0));
    const Rational& lead = b.c.back();
    for (int i = a.degree() - b.degree(); i >= 0; --i) {
      Rational f = rem[i + b.degree()] / lead;
      q[i] = f;
      if (f != 0)
        for (int j = 0; j <= b.degree(); ++j) rem[i + j] -= f * b.c[j];
    }
    for (const auto& x : rem)
      if (x != 0) return std::nullopt;
    WPoly result;
    result.c = std::move(q);
    result.trim();
    return result;
  }
};

// ---------------------------------------------------------------------------
// Truncated power series in z, coefficients in Ring.  All operations discard
// terms above the truncation order; nothing is ever invented.
// ---------------------------------------------------------------------------

template <class Ring>
struct SeriesT {
  using value = typename Ring::value;
  std::vector<value> c;  // c[n] = coefficient of z^n, n = 0..order

  SeriesT() = default;
  explicit SeriesT(int order) : c(order + 1, Ring::zero()) {}

  int order() const { return static_cast<int>(c.size()) - 1; }
  const value& coeff(int n) const {
    static const value z = Ring::zero();
    if (n < 0 || n > order()) return z;
    return c[n];
  }
  void set(int n, value v) {
    if (n >= 0 && n <= order()) c[n] = std::move(v);
  }
  SeriesT truncated(int T) const {
    SeriesT r(T);
    for (int i = 0; i <= std::min(T, order()); ++i) r.c[i] = c[i];
    return r;
  }
  int valuation() const {  // -1 for the zero series
    for (int i = 0; i <= order(); ++i)
      if (!Ring::is_zero(c[i])) return i;
    return -1;
  }
};

using Series = SeriesT<RationalRing>;
using WSeries = SeriesT<WPolyRing>;

template <class Ring>
SeriesT<Ring> series_add(const SeriesT<Ring>& a, const SeriesT<Ring>& b) {
  SeriesT<Ring> r(std::min(a.order(), b.order()));
  for (int i = 0; i <= r.order(); ++i) r.c[i] = Ring::add(a.c[i], b.c[i]);
  return r;
}

template <class Ring>
SeriesT<Ring> series_sub(const SeriesT<Ring>& a, const SeriesT<Ring>& b) {
  SeriesT<Ring> r(std::min(a.order(), b.order()));
  for (int i = 0; i <= r.order(); ++i) r.c[i] = Ring::sub(a.c[i], b.c[i]);
  return r;
}

template <class Ring>
SeriesT<Ring> series_mul(const SeriesT<Ring>& a, const SeriesT<Ring>& b) {
  SeriesT<Ring> r(std::min(a.order(), b.order()));
  for (int i = 0; i <= r.order(); ++i) {
    if (Ring::is_zero(a.c[i])) continue;
    for (int j = 0; i + j <= r.order(); ++j) {
      if (Ring::is_zero(b.c[j])) continue;
      r.c[i + j] = Ring::add(r.c[i + j], Ring::mul(a.c[i], b.c[j]));
    }
  }
  return r;
}

// d/dz, one order lower.
template <class Ring>
SeriesT<Ring> series_derive(const SeriesT<Ring>& a) {
  SeriesT<Ring> r(std::max(a.order() - 1, 0));
  for (int i = 1; i <= a.order(); ++i)
    r.c[i - 1] = Ring::mul(a.c[i], typename Ring::value(Rational(i)));
  return r;
}

// Multiplication by z^k (shift up), same truncation order.
template <class Ring>
SeriesT<Ring> series_shift(const SeriesT<Ring>& a, int k) {
  SeriesT<Ring> r(a.order());
  for (int i = 0; i + k <= a.order(); ++i) r.c[i + k] = a.c[i];
  return r;
}

// outer(inner(z)); requires inner constant term zero.
Series series_compose(const Series& outer, const Series& inner);

// Successive ratios (n, a_n / a_{n+1}) over indices with nonzero entries,
// the raw material for singularity cross-checks.
std::vector<std::pair<int, Real>> coefficient_ratios(const Series& s);

// Evaluation of a truncated series at a real point (plain partial sum).
Real series_eval(const Series& s, const Real& z);

// Specialize a bivariate series at w = w0.
Series specialize_w(const WSeries& s, const Rational& w0);

}  // namespace nccount

#endif
