#ifndef NCCOUNT_ROOTS_HPP
#define NCCOUNT_ROOTS_HPP

#include "nccount/polynomial.hpp"

namespace nccount {

// Rational enclosure lo <= root <= hi (lo == hi for an exact rational root).
struct RootInterval {
  Rational lo, hi;
  Rational mid() const { return (lo + hi) / 2; }
  Rational width() const { return hi - lo; }
  Real value() const { return to_real(mid()); }
};

// Number of sign variations in the coefficient sequence: an upper bound on
// the number of positive real roots (Descartes).
int descartes_variations(const ZPoly& f);

// Disjoint rational enclosures of all positive real roots of f (multiple
// roots collapsed via the squarefree part), each narrower than `width`,
// sorted increasingly.  Sign-change bisection with exact rational
// evaluation, root counts certified by Sturm sequences.
std::vector<RootInterval> isolate_positive_roots(const ZPoly& f, const Rational& width);

// Shrinks an isolating interval of a squarefree polynomial to the target
// width by plain sign bisection.
RootInterval refine_root(const ZPoly& squarefree, RootInterval iv, const Rational& width);

}  // namespace nccount

#endif
