#ifndef NCCOUNT_BOUNDS_HPP
#define NCCOUNT_BOUNDS_HPP

#include "nccount/singularity.hpp"

#include <map>
#include <string>

namespace nccount {

// The growth and component-rate constants consumed by the bound formulas,
// pulled from the singularity pipeline rather than hard-coded literals.
struct EntropyConstants {
  Real omega_forests;        // growth of nc forests
  Real omega_forests_noiso;  // ... without isolated vertices
  Real omega_marked;         // marked forests
  Real omega_marked_noiso;   // marked forests without isolated vertices
  Real omega_mixed;          // optionally marked non-isolated components
  Real omega_mixed_noiso;    // same, no isolated vertices at all
  Real kappa_marked_noiso;   // component rates of the classes feeding the bounds
  Real kappa_mixed;
  Real kappa_mixed_noiso;
};

// Computes every constant once (cached singularity reports make this cheap
// after the first call).
EntropyConstants entropy_constants();

struct BoundReport {
  std::string kind;  // LB_TREES, LB_FORESTS, LB_NOISO_FORESTS, UB_TREES
  std::map<std::string, Real> parameters;       // optimizer location
  Real exponent_per_point = 0;                  // log2(count)/N at the optimum
  Real base = 0;                                // 2^exponent per point
  std::map<std::string, Real> provenance;       // constants consumed
  std::map<std::string, Real> reference_params; // pinned comparison point
  Real base_at_reference = 0;
  std::map<std::string, Real> extras;           // variant-specific values
};

// Exponent (per chain point pair) of the spanning-tree lower bound at
// (alpha, beta); throws std::domain_error outside the binomial domain.
Real lb_trees_exponent(const Real& alpha, const Real& beta, const EntropyConstants& k);
// Three-parameter forest lower bound exponent at (alpha, beta, gamma).
Real lb_forests_exponent(const Real& alpha, const Real& beta, const Real& gamma,
                         const EntropyConstants& k);
// Two-parameter bound for forests without isolated vertices.
Real lb_noiso_exponent(const Real& alpha, const Real& beta, const EntropyConstants& k);

// Optimized bound reports.  The per-point base of the 2n-point chain is
// 2^(exponent/2).
BoundReport lb_trees();
BoundReport lb_forests();
// Optimizes the no-isolated-vertex bound, then applies the one-more-per-base
// growth shift; extras carry both the intermediate and the shifted base.
BoundReport lb_noiso_then_shift();

// The upper-bound pipeline: balanced split of chain components, closed-form
// interior matching size, and the final exponent maximization.
BoundReport ub_trees();

// Exact number of interior-edge forests of the double chain on 2n points
// with k edges (triple binomial sum; out-of-range binomials vanish).
Int interior_forest_count(int n, int k);

// Interior-forest upper-bound exponent h_alpha(lambda) and its closed-form
// maximizer (minus branch).
Real ub_interior_exponent(const Real& alpha, const Real& lambda);
Real ub_interior_maximizer(const Real& alpha);

// Exact double-chain counts at desk scale with effective per-point bases;
// documentation output, nothing asserted.
struct SandwichRow {
  int n = 0;
  Int trees;
  Int forests;
  Real tree_base;    // trees^(1/2n)
  Real forest_base;  // forests^(1/2n)
};
std::vector<SandwichRow> sandwich_report(int max_n, int oracle_cap = 12);

}  // namespace nccount

#endif
