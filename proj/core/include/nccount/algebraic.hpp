#ifndef NCCOUNT_ALGEBRAIC_HPP
#define NCCOUNT_ALGEBRAIC_HPP

#include "nccount/polynomial.hpp"

namespace nccount {

// Solves P(z, Y(z)) = 0 for the unique power-series branch consistent with
// the seed (seed[k] is the coefficient of z^k).  The branch is extended
// order by order; extraction is valuation-aware, so equations whose z = 0
// specialization has a multiple root at the seed value (all the catalog
// equations here) are handled without Puiseux machinery.
//
// Throws std::runtime_error("branch mismatch") when no power-series branch
// agrees with the seed, and std::runtime_error("ambiguous seed, extend it")
// when the seed is too short to separate branches.
Series solve_algebraic(const IntPolynomial& p, const std::vector<Rational>& seed, int T);

// Bivariate version: P(z, w, Y(z, w)) = 0, coefficients polynomial in w.
WSeries solve_algebraic_bivariate(const IntPolynomial& p, const std::vector<WPoly>& seed,
                                  int T);

// P(z, Y(z)) mod z^(T+1) — the substitution check; true iff identically zero.
bool satisfies_equation(const IntPolynomial& p, const Series& y);
bool satisfies_equation(const IntPolynomial& p, const WSeries& y);

// Fixed point F = 1 + T(zF) of the forest composition scheme (F(0) = 1).
// The tree series must have zero constant term.  With a mark weight the
// fixed point is F = 1 + w T(zF), every component carrying one factor w.
Series forest_from_tree(const Series& tree);
WSeries forest_from_tree_marked(const Series& tree);

// Two-class scheme F = 1 + A(zF) + w B(zF): components from class A are
// unweighted, components from class B carry a factor w each.
WSeries forest_from_trees(const Series& unmarked, const Series& marked);

// Recovers the minimal-degree polynomial relation P(z, w, Y) = 0 satisfied
// by a bivariate series, by exact linear algebra on its coefficients.
// Ansatz degrees are grown until a one-dimensional kernel appears; the
// result is integer, primitive, and substitution-verified to the series
// order.  Throws if nothing is found within the degree caps.
IntPolynomial equation_from_series(const WSeries& y, int max_ydeg = 6, int max_zdeg = 5,
                                   int max_wdeg = 5);

}  // namespace nccount

#endif
