#ifndef NCCOUNT_CLASSES_HPP
#define NCCOUNT_CLASSES_HPP

#include "nccount/algebraic.hpp"

#include <string>

namespace nccount {

// The graph classes on points in convex position.  Tree classes are the
// building blocks; forest classes arise from them through the composition
// scheme F = 1 + T(zF).  "Marked" classes distinguish one vertex per
// component; the Mixed classes mark only (some of the) non-isolated
// components.
enum class GraphClass {
  Trees,              // all nc trees
  MarkedTrees,        // trees with one distinguished vertex
  TreesGe2,           // trees with at least two vertices
  MarkedTreesGe2,     // marked trees with at least two vertices
  Forests,            // components: any tree
  MarkedForests,      // components: marked trees
  ForestsNoiso,       // components: trees with >= 2 vertices
  MarkedForestsNoiso, // components: marked trees with >= 2 vertices
  Mixed,              // components: trees, or marked trees with >= 2 vertices
  MixedNoiso,         // components: trees with >= 2 vertices, optionally marked
};

inline constexpr GraphClass kAllClasses[] = {
    GraphClass::Trees,          GraphClass::MarkedTrees,
    GraphClass::TreesGe2,       GraphClass::MarkedTreesGe2,
    GraphClass::Forests,        GraphClass::MarkedForests,
    GraphClass::ForestsNoiso,   GraphClass::MarkedForestsNoiso,
    GraphClass::Mixed,          GraphClass::MixedNoiso,
};

const char* class_name(GraphClass c);
bool class_from_name(const std::string& s, GraphClass& out);
bool is_forest_class(GraphClass c);
// Classes whose bivariate refinement tracks a component statistic.
bool has_bivariate(GraphClass c);

// The defining polynomial of the class series: exact integer polynomial in
// (z, Y), hard-coded where a closed form is on record, derived through the
// composition scheme otherwise.  Derived equations are substitution-verified
// against the class series on first use.
const IntPolynomial& equation_for(GraphClass c);

// The bivariate equation in (z, w, Y), w marking components.
const IntPolynomial& bivariate_equation_for(GraphClass c);

// Exact truncated class series (coefficient of z^n = number of n-point
// graphs; counting starts at f_0 = 1 for forest classes, t_0 = 0 for trees).
Series class_series(GraphClass c, int T);

// Bivariate refinement: coefficient of z^n w^k counts graphs with k
// components (k marked components for the Mixed classes).
WSeries class_bivariate_series(GraphClass c, int T);

// Exact n-th coefficient; throws std::runtime_error("raise truncation") for
// n above the truncation order.
Int class_count(GraphClass c, int n, int T = 80);

// Closed-form number of nc forests on n convex points with exactly c
// components; 0 outside 1 <= c <= n.
Int forests_by_components(int n, int c);

// Spanning trees of the single chain on n+1 points (n-point lower chain).
Int single_chain_tree_count(int n);

// Seeds used to pick the combinatorial branch of each catalog equation.
std::vector<Rational> class_seed(GraphClass c);
std::vector<WPoly> class_bivariate_seed(GraphClass c);

}  // namespace nccount

#endif
