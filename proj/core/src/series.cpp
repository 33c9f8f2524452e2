#include "nccount/series.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace nccount {

std::string format_real(const Real& x, unsigned digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

Series series_compose(const Series& outer, const Series& inner) {
  if (inner.order() >= 0 && inner.coeff(0) != 0)
    throw std::invalid_argument("series_compose: inner series must have zero constant term");
  int T = std::min(outer.order(), inner.order());
  Series acc(T);
  // Horner over the outer coefficients.
  for (int d = outer.order() > T ? T : outer.order(); d >= 0; --d) {
    acc = series_mul(acc, inner.truncated(T));
    acc.c[0] += outer.c[d];
  }
  return acc;
}

std::vector<std::pair<int, Real>> coefficient_ratios(const Series& s) {
  std::vector<std::pair<int, Real>> out;
  for (int n = 0; n + 1 <= s.order(); ++n) {
    if (s.c[n] == 0 || s.c[n + 1] == 0) continue;
    out.emplace_back(n, to_real(s.c[n]) / to_real(s.c[n + 1]));
  }
  return out;
}

Real series_eval(const Series& s, const Real& z) {
  Real acc = 0;
  for (int n = s.order(); n >= 0; --n) acc = acc * z + to_real(s.c[n]);
  return acc;
}

Series specialize_w(const WSeries& s, const Rational& w0) {
  Series r(s.order());
  for (int n = 0; n <= s.order(); ++n) r.c[n] = s.c[n].eval(w0);
  return r;
}

}  // namespace nccount
