#ifndef NCCOUNT_POLYNOMIAL_HPP
#define NCCOUNT_POLYNOMIAL_HPP

#include "nccount/series.hpp"

#include <array>
#include <map>
#include <string>

namespace nccount {

// Variable slots of IntPolynomial.  Tree-class equations live in (Z, Y)
// (reading Z as the tree-size variable and Y as the tree series); forest and
// bivariate equations use all three.
enum Var : int { VZ = 0, VW = 1, VY = 2 };

// Sparse polynomial with exact integer coefficients in up to three variables.
// No zero-coefficient terms are stored.
struct IntPolynomial {
  std::map<std::array<int, 3>, Int> terms;  // exponents (z, w, Y) -> coeff

  IntPolynomial() = default;

  void add_term(Int c, int ez, int ew, int ey);
  bool zero() const { return terms.empty(); }
  int degree(Var v) const;
  IntPolynomial derivative(Var v) const;
  IntPolynomial specialize_w1() const;  // set w = 1 (drops the w slot)

  // Integer content (gcd of coefficients, sign of the leading lex term kept
  // positive); primitive part.
  Int content() const;
  IntPolynomial primitive_part() const;

  Real eval(const Real& z, const Real& w, const Real& y) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const Int& c, const IntPolynomial& a);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.terms == b.terms;
  }

  std::string str() const;  // for diagnostics
};

// Convenience builder: {coeff, ez, ew, ey} tuples.
struct PolyTerm {
  long long c;
  int ez, ew, ey;
};
IntPolynomial make_poly(std::initializer_list<PolyTerm> ts);

// Coefficients of Y^d, each a polynomial in (z, w).
std::vector<IntPolynomial> coefficients_in_y(const IntPolynomial& p);

// P with Y replaced by Y + Z (used to shift a tree class by its linear term).
IntPolynomial substitute_y_plus_z(const IntPolynomial& p);

// P(z, Y/z) * z^(deg_Y P): rescales the solved variable by z (T* = z T0').
IntPolynomial substitute_y_div_z(const IntPolynomial& p);

// The composition scheme for forests: given the equation Q(x, t) = 0 of a
// tree class t = T(x) (stored in the (Z, Y) slots), returns the equation in
// (z, w, Y) satisfied by the forest series Y = F(z, w) = 1 + w T(z F),
// obtained by substituting x = zY, t = (Y - 1)/w and clearing w.
IntPolynomial forest_equation_from_tree(const IntPolynomial& tree_eq);

// Resultant eliminating the given variable via the Sylvester matrix,
// exact over the integers.  Throws std::invalid_argument if either input
// is constant in that variable.
IntPolynomial resultant(const IntPolynomial& p, const IntPolynomial& q, Var v);

// resultant(P, dP/dY, Y); integer content not removed.  Throws
// std::runtime_error on an identically zero result.
IntPolynomial discriminant_y(const IntPolynomial& p);

// --------------------------------------------------------------------------
// Dense univariate polynomials (in z) used for root work.
// --------------------------------------------------------------------------

struct ZPoly {
  std::vector<Int> c;  // ascending powers, trailing zeros trimmed

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool zero() const { return c.empty(); }
  Int content_signed() const;        // gcd * sign(leading)
  ZPoly primitive() const;           // content divided out, leading > 0
  ZPoly derivative() const;
  Rational eval(const Rational& x) const;
  Real eval(const Real& x) const;
  std::string str() const;
  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c == b.c; }
};

ZPoly to_zpoly(const IntPolynomial& p);  // requires w- and Y-degrees zero

// Squarefree decomposition over Q, returned as primitive integer factors with
// multiplicities (ascending), leading coefficients positive.  Constant
// factors are dropped.
std::vector<std::pair<ZPoly, int>> squarefree_factors(const ZPoly& f);

// Product of the distinct squarefree factors (the radical), primitive.
ZPoly squarefree_part(const ZPoly& f);

// Solver-facing view: coefficient series of Y^d over the requested ring.
std::vector<Series> equation_coefficients_univariate(const IntPolynomial& p, int order);
std::vector<WSeries> equation_coefficients_bivariate(const IntPolynomial& p, int order);

}  // namespace nccount

#endif
