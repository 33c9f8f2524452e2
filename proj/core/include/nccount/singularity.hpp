#ifndef NCCOUNT_SINGULARITY_HPP
#define NCCOUNT_SINGULARITY_HPP

#include "nccount/classes.hpp"
#include "nccount/roots.hpp"

#include <optional>

namespace nccount {

struct CandidateRoot {
  Real value;
  bool accepted = false;
  std::string reason;  // why rejected (or "accepted")
};

// Singular data of one class: dominant singularity rho, singular value tau,
// growth constant omega = 1/rho, subexponential constant gamma, and (for
// bivariate classes) the mean-component rate kappa.
struct SingularityReport {
  GraphClass cls = GraphClass::Trees;
  Real rho, tau, omega, gamma;
  std::optional<Real> kappa;
  std::vector<CandidateRoot> candidates;
  Real ratio_estimate;       // extrapolated a_n / a_{n+1}
  Real g_y, g_yy, g_z;       // equation partials at (rho, tau)
  int truncation = 0;
};

// Least-squares extrapolation of a_n / a_{n+1} over the last `use_last`
// ratios with the basis {1, 1/n, n^(-3/2), 1/n^2}; plain ratios converge
// like 1/n, too slowly for the cross-checks.
Real ratio_extrapolate(const Series& s, int use_last = 20);

// Fitted limit of a_n rho^n n^(3/2) over n in [T/2, T] (basis
// {1, n^(-1/2), 1/n}); cross-checks the closed-form gamma.
Real gamma_from_fit(const Series& s, const Real& rho);

// Locates the dominant singularity of the class series: positive
// discriminant roots are candidates, each accepted iff consistent with the
// coefficient-ratio estimate; the smallest accepted one is rho.  tau is the
// root of G_y(rho, .) closest to the numerically continued branch value.
// Throws std::runtime_error("singularity selection failed") when no
// candidate is consistent with the ratio estimate.
SingularityReport dominant_singularity(GraphClass cls, int T = 80);

// gamma = sqrt(rho G_z / (2 pi G_yy)) for an explicit equation and located
// singularity; error if the radicand is negative.
Real subexponential_constant(const IntPolynomial& eq, const Real& rho, const Real& tau);

struct ComponentRate {
  Real kappa;            // -rho'(1)/rho from the bivariate discriminant
  Real finite_mean;      // exact mean component count at n = truncation
  int n = 0;             // the finite n used for the cross-check
};

// kappa = -rho'(1)/rho with rho'(1) = -D_w(rho,1)/D_z(rho,1), D the
// bivariate discriminant; the factor of D vanishing at (rho, 1) is simple,
// so implicit differentiation of the full discriminant is equivalent.
// Throws std::runtime_error("degenerate factor") if D_z(rho, 1) vanishes.
ComponentRate component_rate(GraphClass cls, int T = 60);

// Exact Pr[k >= threshold] for the component statistic at size n.
Rational component_tail_probability(GraphClass cls, int n, int threshold);

// Exact mean number of components at size n, as a rational.
Rational component_mean(GraphClass cls, int n);

}  // namespace nccount

#endif
