#include "nccount/polynomial.hpp"

#include <boost/multiprecision/integer.hpp>

#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace nccount {

void IntPolynomial::add_term(Int c, int ez, int ew, int ey) {
  if (c == 0) return;
  std::array<int, 3> e{ez, ew, ey};
  auto it = terms.find(e);
  if (it == terms.end()) {
    terms.emplace(e, std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

int IntPolynomial::degree(Var v) const {
  int d = -1;
  for (const auto& [e, c] : terms) d = std::max(d, e[v]);
  return d;
}

IntPolynomial IntPolynomial::derivative(Var v) const {
  IntPolynomial r;
  for (const auto& [e, c] : terms) {
    if (e[v] == 0) continue;
    auto e2 = e;
    e2[v] -= 1;
    r.add_term(c * e[v], e2[0], e2[1], e2[2]);
  }
  return r;
}

IntPolynomial IntPolynomial::specialize_w1() const {
  IntPolynomial r;
  for (const auto& [e, c] : terms) r.add_term(c, e[0], 0, e[2]);
  return r;
}

Int IntPolynomial::content() const {
  Int g = 0;
  for (const auto& [e, c] : terms) g = boost::multiprecision::gcd(g, abs(c));
  if (g == 0) return 1;
  if (terms.rbegin()->second < 0) g = -g;
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  Int g = content();
  IntPolynomial r;
  for (const auto& [e, c] : terms) r.terms[e] = c / g;
  return r;
}

Real IntPolynomial::eval(const Real& z, const Real& w, const Real& y) const {
  // Cache powers; degrees are small.
  auto pw = [](const Real& x, int d) {
    Real r = 1;
    for (int i = 0; i < d; ++i) r *= x;
    return r;
  };
  Real s = 0;
  for (const auto& [e, c] : terms)
    s += Real(c) * pw(z, e[0]) * pw(w, e[1]) * pw(y, e[2]);
  return s;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r = a;
  for (const auto& [e, c] : b.terms) r.add_term(c, e[0], e[1], e[2]);
  return r;
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r = a;
  for (const auto& [e, c] : b.terms) r.add_term(-c, e[0], e[1], e[2]);
  return r;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms)
      r.add_term(ca * cb, ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]);
  return r;
}

IntPolynomial operator*(const Int& c, const IntPolynomial& a) {
  IntPolynomial r;
  if (c == 0) return r;
  for (const auto& [e, k] : a.terms) r.terms[e] = c * k;
  return r;
}

std::string IntPolynomial::str() const {
  if (terms.empty()) return "0";
  static const char* names[3] = {"z", "w", "Y"};
  // Highest Y-degree first for readability.
  std::vector<std::pair<std::array<int, 3>, Int>> ts(terms.begin(), terms.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    if (a.first[2] != b.first[2]) return a.first[2] > b.first[2];
    if (a.first[0] != b.first[0]) return a.first[0] > b.first[0];
    return a.first[1] > b.first[1];
  });
  std::string out;
  for (const auto& [e, c] : ts) {
    Int ac = abs(c);
    std::string term;
    bool hasvar = e[0] || e[1] || e[2];
    if (ac != 1 || !hasvar) term = ac.str();
    for (int v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      if (!term.empty()) term += "*";
      term += names[v];
      if (e[v] > 1) term += "^" + std::to_string(e[v]);
    }
    if (out.empty())
      out = (c < 0 ? "-" : "") + term;
    else
      out += (c < 0 ? " - " : " + ") + term;
  }
  return out;
}

IntPolynomial make_poly(std::initializer_list<PolyTerm> ts) {
  IntPolynomial p;
  for (const auto& t : ts) p.add_term(Int(t.c), t.ez, t.ew, t.ey);
  return p;
}

std::vector<IntPolynomial> coefficients_in_y(const IntPolynomial& p) {
  int d = std::max(p.degree(VY), 0);
  std::vector<IntPolynomial> out(d + 1);
  for (const auto& [e, c] : p.terms) out[e[2]].add_term(c, e[0], e[1], 0);
  return out;
}

IntPolynomial substitute_y_plus_z(const IntPolynomial& p) {
  IntPolynomial r;
  for (const auto& [e, c] : p.terms) {
    // Y^d -> (Y + Z)^d
    for (int j = 0; j <= e[2]; ++j) {
      Int b = binomial(e[2], j);
      r.add_term(c * b, e[0] + (e[2] - j), e[1], j);
    }
  }
  return r;
}

IntPolynomial substitute_y_div_z(const IntPolynomial& p) {
  int d = p.degree(VY);
  IntPolynomial r;
  for (const auto& [e, c] : p.terms) r.add_term(c, e[0] + (d - e[2]), e[1], e[2]);
  return r;
}

IntPolynomial forest_equation_from_tree(const IntPolynomial& tree_eq) {
  int dt = tree_eq.degree(VY);
  IntPolynomial r;
  for (const auto& [e, c] : tree_eq.terms) {
    int a = e[0];  // power of x
    int b = e[2];  // power of t
    // c * (zY)^a * (Y-1)^b * w^(dt-b)
    for (int j = 0; j <= b; ++j) {
      Int bc = binomial(b, j);
      Int sign = ((b - j) % 2 == 0) ? 1 : -1;
      r.add_term(c * bc * sign, a, dt - b, a + j);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Resultants via Sylvester determinant with minor-expansion DP.
// ---------------------------------------------------------------------------

namespace {

std::vector<IntPolynomial> coefficients_in(const IntPolynomial& p, Var v) {
  int d = std::max(p.degree(v), 0);
  std::vector<IntPolynomial> out(d + 1);
  for (const auto& [e, c] : p.terms) {
    auto e2 = e;
    int k = e2[v];
    e2[v] = 0;
    out[k].add_term(c, e2[0], e2[1], e2[2]);
  }
  return out;
}

IntPolynomial determinant(const std::vector<std::vector<IntPolynomial>>& m) {
  const int s = static_cast<int>(m.size());
  if (s > 16) throw std::runtime_error("determinant: matrix too large");
  // Expansion over rows with memoization on the set of used columns.
  std::unordered_map<uint32_t, IntPolynomial> memo;
  std::function<IntPolynomial(int, uint32_t)> det = [&](int row, uint32_t used) -> IntPolynomial {
    if (row == s) {
      IntPolynomial one;
      one.add_term(1, 0, 0, 0);
      return one;
    }
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    IntPolynomial acc;
    int parity = 0;
    for (int col = 0; col < s; ++col) {
      if (used & (1u << col)) continue;
      if (!m[row][col].zero()) {
        IntPolynomial sub = det(row + 1, used | (1u << col));
        IntPolynomial contrib = m[row][col] * sub;
        acc = (parity % 2 == 0) ? acc + contrib : acc - contrib;
      }
      ++parity;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return det(0, 0);
}

}  // namespace

IntPolynomial resultant(const IntPolynomial& p, const IntPolynomial& q, Var v) {
  int m = p.degree(v), n = q.degree(v);
  if (m < 1 || n < 1)
    throw std::invalid_argument("resultant: input constant in the eliminated variable");
  auto pc = coefficients_in(p, v);
  auto qc = coefficients_in(q, v);
  int s = m + n;
  std::vector<std::vector<IntPolynomial>> mat(s, std::vector<IntPolynomial>(s));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) mat[i][i + j] = pc[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) mat[n + i][i + j] = qc[n - j];
  return determinant(mat);
}

IntPolynomial discriminant_y(const IntPolynomial& p) {
  if (p.degree(VY) < 2)
    throw std::invalid_argument("discriminant: degree in Y must be at least 2");
  IntPolynomial d = resultant(p, p.derivative(VY), VY);
  if (d.zero())
    throw std::runtime_error("discriminant: identically zero (equation not squarefree in Y)");
  return d;
}

// ---------------------------------------------------------------------------
// Dense univariate helpers.
// ---------------------------------------------------------------------------

Int ZPoly::content_signed() const {
  Int g = 0;
  for (const auto& x : c) g = boost::multiprecision::gcd(g, abs(x));
  if (g == 0) return 1;
  if (!c.empty() && c.back() < 0) g = -g;
  return g;
}

ZPoly ZPoly::primitive() const {
  ZPoly r = *this;
  Int g = content_signed();
  for (auto& x : r.c) x /= g;
  return r;
}

ZPoly ZPoly::derivative() const {
  ZPoly r;
  if (degree() < 1) return r;
  r.c.resize(c.size() - 1);
  for (size_t i = 1; i < c.size(); ++i) r.c[i - 1] = c[i] * Int(i);
  return r;
}

Rational ZPoly::eval(const Rational& x) const {
  Rational r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + Rational(*it);
  return r;
}

Real ZPoly::eval(const Real& x) const {
  Real r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + Real(*it);
  return r;
}

std::string ZPoly::str() const {
  if (zero()) return "0";
  std::ostringstream os;
  for (int i = degree(); i >= 0; --i) {
    if (c[i] == 0) continue;
    if (os.tellp() > 0) os << (c[i] > 0 ? " + " : " - ");
    else if (c[i] < 0) os << "-";
    Int a = abs(c[i]);
    if (a != 1 || i == 0) os << a.str();
    if (i >= 1) {
      if (a != 1) os << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

ZPoly to_zpoly(const IntPolynomial& p) {
  if (p.degree(VW) > 0 || p.degree(VY) > 0)
    throw std::invalid_argument("to_zpoly: polynomial is not univariate in z");
  ZPoly r;
  r.c.assign(std::max(p.degree(VZ), 0) + 1, Int(0));
  for (const auto& [e, c] : p.terms) r.c[e[0]] = c;
  r.trim();
  return r;
}

// Rational dense polynomials, local to squarefree work.
namespace {

using QP = std::vector<Rational>;  // ascending, trimmed

void qtrim(QP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QP qderiv(const QP& a) {
  QP r;
  for (size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * Rational(static_cast<int>(i)));
  return r;
}

QP qsub(const QP& a, const QP& b) {
  QP r = a;
  if (b.size() > r.size()) r.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  qtrim(r);
  return r;
}

// polynomial division: returns remainder, quotient out-param optional
QP qrem(QP a, const QP& b, QP* quot = nullptr) {
  qtrim(a);
  if (b.empty()) throw std::runtime_error("qrem: division by zero polynomial");
  QP q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    qtrim(a);
    if (!a.empty() && a.size() >= b.size() && a.back() == 0) qtrim(a);
  }
  if (quot) {
    qtrim(q);
    *quot = q;
  }
  return a;
}

QP qmonic(QP a) {
  qtrim(a);
  if (a.empty()) return a;
  Rational lead = a.back();
  for (auto& x : a) x /= lead;
  return a;
}

QP qgcd(QP a, QP b) {
  qtrim(a);
  qtrim(b);
  while (!b.empty()) {
    QP r = qrem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return qmonic(a);
}

QP qdiv_exact(const QP& a, const QP& b) {
  QP q;
  QP r = qrem(a, b, &q);
  if (!r.empty()) throw std::runtime_error("qdiv_exact: division not exact");
  return q;
}

QP from_zpoly(const ZPoly& f) {
  QP r;
  for (const auto& x : f.c) r.push_back(Rational(x));
  qtrim(r);
  return r;
}

ZPoly to_integer_primitive(const QP& f) {
  // clear denominators, then primitive part
  Int den = 1;
  for (const auto& x : f) den = boost::multiprecision::lcm(den, denominator(x));
  ZPoly r;
  r.c.resize(f.size());
  for (size_t i = 0; i < f.size(); ++i)
    r.c[i] = numerator(f[i]) * (den / denominator(f[i]));
  r.trim();
  return r.primitive();
}

}  // namespace

std::vector<std::pair<ZPoly, int>> squarefree_factors(const ZPoly& f) {
  std::vector<std::pair<ZPoly, int>> out;
  if (f.degree() < 1) return out;
  // Yun's algorithm over Q.
  QP a = from_zpoly(f);
  QP g = qgcd(a, qderiv(a));
  QP w = qdiv_exact(a, g);
  QP y = qdiv_exact(qderiv(a), g);
  QP z = qsub(y, qderiv(w));
  int i = 1;
  while (w.size() > 1) {
    QP gi = qgcd(w, z);
    if (gi.size() > 1) out.emplace_back(to_integer_primitive(gi), i);
    w = qdiv_exact(w, gi);
    y = qdiv_exact(z, gi);
    z = qsub(y, qderiv(w));
    ++i;
  }
  return out;
}

ZPoly squarefree_part(const ZPoly& f) {
  auto fs = squarefree_factors(f);
  ZPoly r;
  r.c = {Int(1)};
  for (const auto& [p, mult] : fs) {
    (void)mult;
    ZPoly t;
    t.c.assign(r.c.size() + p.c.size() - 1, Int(0));
    for (size_t i = 0; i < r.c.size(); ++i)
      for (size_t j = 0; j < p.c.size(); ++j) t.c[i + j] += r.c[i] * p.c[j];
    t.trim();
    r = t;
  }
  return r.primitive();
}

std::vector<Series> equation_coefficients_univariate(const IntPolynomial& p, int order) {
  if (p.degree(VW) > 0)
    throw std::invalid_argument("equation has a w variable; use the bivariate solver");
  auto cy = coefficients_in_y(p);
  std::vector<Series> out;
  out.reserve(cy.size());
  for (const auto& q : cy) {
    Series s(order);
    for (const auto& [e, c] : q.terms)
      if (e[0] <= order) s.c[e[0]] += Rational(c);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<WSeries> equation_coefficients_bivariate(const IntPolynomial& p, int order) {
  auto cy = coefficients_in_y(p);
  std::vector<WSeries> out;
  out.reserve(cy.size());
  for (const auto& q : cy) {
    WSeries s(order);
    for (const auto& [e, c] : q.terms)
      if (e[0] <= order)
        s.c[e[0]] = s.c[e[0]] + WPoly::monomial(Rational(c), e[1]);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace nccount
