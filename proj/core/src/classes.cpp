#include "nccount/classes.hpp"

#include <mutex>
#include <stdexcept>

namespace nccount {

const char* class_name(GraphClass c) {
  switch (c) {
    case GraphClass::Trees: return "TREES";
    case GraphClass::MarkedTrees: return "MARKED_TREES";
    case GraphClass::TreesGe2: return "TREES_GE2";
    case GraphClass::MarkedTreesGe2: return "MARKED_TREES_GE2";
    case GraphClass::Forests: return "FORESTS";
    case GraphClass::MarkedForests: return "MARKED_FORESTS";
    case GraphClass::ForestsNoiso: return "FORESTS_NOISO";
    case GraphClass::MarkedForestsNoiso: return "MARKED_FORESTS_NOISO";
    case GraphClass::Mixed: return "MIXED";
    case GraphClass::MixedNoiso: return "MIXED_NOISO";
  }
  return "?";
}

bool class_from_name(const std::string& s, GraphClass& out) {
  for (GraphClass c : kAllClasses)
    if (s == class_name(c)) {
      out = c;
      return true;
    }
  return false;
}

bool is_forest_class(GraphClass c) {
  switch (c) {
    case GraphClass::Trees:
    case GraphClass::MarkedTrees:
    case GraphClass::TreesGe2:
    case GraphClass::MarkedTreesGe2: return false;
    default: return true;
  }
}

bool has_bivariate(GraphClass c) { return is_forest_class(c); }

namespace {

// Strips a common monomial factor z^a w^b (derived equations pick one up
// when the solved variable is rescaled).
IntPolynomial strip_monomial(const IntPolynomial& p) {
  int mz = 1 << 20, mw = 1 << 20;
  for (const auto& [e, c] : p.terms) {
    mz = std::min(mz, e[0]);
    mw = std::min(mw, e[1]);
  }
  if (p.terms.empty() || (mz == 0 && mw == 0)) return p;
  IntPolynomial r;
  for (const auto& [e, c] : p.terms) r.add_term(c, e[0] - mz, e[1] - mw, e[2]);
  return r;
}

// t^3 - x t + x^2 = 0, the nc-tree equation (x in the z slot, t in Y).
IntPolynomial tree_equation() {
  return make_poly({{1, 0, 0, 3}, {-1, 1, 0, 1}, {1, 2, 0, 0}});
}

// (27x^2 - 4x) u^3 + (1 - 6x) u - 1 + 8x = 0 for u = t'(x).
IntPolynomial tree_derivative_equation() {
  return make_poly(
      {{27, 2, 0, 3}, {-4, 1, 0, 3}, {1, 0, 0, 1}, {-6, 1, 0, 1}, {-1, 0, 0, 0}, {8, 1, 0, 0}});
}

// Equation of the tree class underlying each forest class (the solved
// variable is the tree series of the class).
IntPolynomial component_equation(GraphClass c) {
  switch (c) {
    case GraphClass::Trees:
    case GraphClass::Forests: return tree_equation();
    case GraphClass::MarkedTrees:
    case GraphClass::MarkedForests:
      // marked trees s = x t'(x): substitute u = s/x and clear.
      return strip_monomial(substitute_y_div_z(tree_derivative_equation()))
          .primitive_part();
    case GraphClass::TreesGe2:
    case GraphClass::ForestsNoiso:
      // trees minus the single vertex: t = s + x.
      return strip_monomial(substitute_y_plus_z(tree_equation())).primitive_part();
    case GraphClass::MarkedTreesGe2:
    case GraphClass::MarkedForestsNoiso:
      return strip_monomial(
                 substitute_y_plus_z(component_equation(GraphClass::MarkedTrees)))
          .primitive_part();
    default:
      throw std::logic_error("component_equation: mixed classes have two components");
  }
}

struct Catalog {
  std::mutex mu;
  std::map<GraphClass, IntPolynomial> equations;
  std::map<GraphClass, IntPolynomial> biv_equations;
  std::map<GraphClass, Series> uni;
  std::map<GraphClass, WSeries> biv;
};

Catalog& catalog() {
  static Catalog c;
  return c;
}

Series marked_from_trees(const Series& t) {
  Series r(t.order());
  for (int n = 0; n <= t.order(); ++n) r.c[n] = t.c[n] * Rational(n);
  return r;
}

Series drop_linear(const Series& t) {
  Series r = t;
  if (r.order() >= 1) r.c[1] = 0;
  return r;
}

// Bivariate series via the forest fixed point (exact, integer arithmetic).
WSeries compute_bivariate(GraphClass c, int T) {
  Series trees = class_series(GraphClass::Trees, T);
  switch (c) {
    case GraphClass::Forests: return forest_from_tree_marked(trees);
    case GraphClass::MarkedForests:
      return forest_from_tree_marked(marked_from_trees(trees));
    case GraphClass::ForestsNoiso:
      return forest_from_tree_marked(drop_linear(trees));
    case GraphClass::MarkedForestsNoiso:
      return forest_from_tree_marked(drop_linear(marked_from_trees(trees)));
    case GraphClass::Mixed:
      return forest_from_trees(trees, drop_linear(marked_from_trees(trees)));
    case GraphClass::MixedNoiso:
      return forest_from_trees(drop_linear(trees), drop_linear(marked_from_trees(trees)));
    default:
      throw std::invalid_argument("class has no bivariate refinement");
  }
}

// The two Mixed-class equations are not in the closed-form catalog; they are
// reconstructed once from the bivariate series and substitution-verified.
IntPolynomial reconstruct_bivariate_equation(GraphClass c) {
  WSeries y = compute_bivariate(c, 34);
  IntPolynomial p = equation_from_series(y);
  return p;
}

}  // namespace

const IntPolynomial& bivariate_equation_for(GraphClass c) {
  if (!has_bivariate(c))
    throw std::invalid_argument("bivariate_equation_for: tree classes are univariate");
  auto& cat = catalog();
  {
    std::scoped_lock lk(cat.mu);
    auto it = cat.biv_equations.find(c);
    if (it != cat.biv_equations.end()) return it->second;
  }
  IntPolynomial p;
  if (c == GraphClass::Mixed || c == GraphClass::MixedNoiso) {
    p = reconstruct_bivariate_equation(c);
  } else {
    p = forest_equation_from_tree(component_equation(c)).primitive_part();
  }
  std::scoped_lock lk(cat.mu);
  return cat.biv_equations.emplace(c, std::move(p)).first->second;
}

const IntPolynomial& equation_for(GraphClass c) {
  auto& cat = catalog();
  {
    std::scoped_lock lk(cat.mu);
    auto it = cat.equations.find(c);
    if (it != cat.equations.end()) return it->second;
  }
  IntPolynomial p;
  switch (c) {
    case GraphClass::Trees:
      p = tree_equation();
      break;
    case GraphClass::MarkedTrees:
    case GraphClass::TreesGe2:
    case GraphClass::MarkedTreesGe2:
      p = component_equation(c);
      break;
    case GraphClass::Forests:
    case GraphClass::MarkedForests:
    case GraphClass::ForestsNoiso:
    case GraphClass::MarkedForestsNoiso:
    case GraphClass::Mixed:
    case GraphClass::MixedNoiso:
      p = bivariate_equation_for(c).specialize_w1().primitive_part();
      break;
  }
  std::scoped_lock lk(cat.mu);
  return cat.equations.emplace(c, std::move(p)).first->second;
}

std::vector<Rational> class_seed(GraphClass c) {
  switch (c) {
    case GraphClass::Trees:
    case GraphClass::MarkedTrees: return {Rational(0), Rational(1)};
    case GraphClass::TreesGe2:
    case GraphClass::MarkedTreesGe2: return {Rational(0), Rational(0)};
    case GraphClass::Forests:
    case GraphClass::MarkedForests:
    case GraphClass::Mixed: return {Rational(1), Rational(1)};
    case GraphClass::ForestsNoiso:
    case GraphClass::MarkedForestsNoiso:
    case GraphClass::MixedNoiso: return {Rational(1), Rational(0)};
  }
  return {};
}

std::vector<WPoly> class_bivariate_seed(GraphClass c) {
  switch (c) {
    case GraphClass::Forests:
    case GraphClass::MarkedForests:
      return {WPoly(Rational(1)), WPoly::monomial(Rational(1), 1)};
    case GraphClass::Mixed: return {WPoly(Rational(1)), WPoly(Rational(1))};
    case GraphClass::ForestsNoiso:
    case GraphClass::MarkedForestsNoiso:
    case GraphClass::MixedNoiso: return {WPoly(Rational(1)), WPoly()};
    default: throw std::invalid_argument("class has no bivariate refinement");
  }
}

Series class_series(GraphClass c, int T) {
  auto& cat = catalog();
  {
    std::scoped_lock lk(cat.mu);
    auto it = cat.uni.find(c);
    if (it != cat.uni.end() && it->second.order() >= T) return it->second.truncated(T);
  }
  Series s;
  switch (c) {
    case GraphClass::Trees:
      s = solve_algebraic(equation_for(c), class_seed(c), T);
      break;
    case GraphClass::MarkedTrees:
      s = marked_from_trees(class_series(GraphClass::Trees, T));
      break;
    case GraphClass::TreesGe2:
      s = drop_linear(class_series(GraphClass::Trees, T));
      break;
    case GraphClass::MarkedTreesGe2:
      s = drop_linear(marked_from_trees(class_series(GraphClass::Trees, T)));
      break;
    case GraphClass::Mixed:
    case GraphClass::MixedNoiso:
      s = specialize_w(class_bivariate_series(c, T), Rational(1));
      break;
    default:
      s = solve_algebraic(equation_for(c), class_seed(c), T);
      break;
  }
  std::scoped_lock lk(cat.mu);
  auto it = cat.uni.find(c);
  if (it == cat.uni.end() || it->second.order() < s.order()) cat.uni[c] = s;
  return s;
}

WSeries class_bivariate_series(GraphClass c, int T) {
  if (!has_bivariate(c))
    throw std::invalid_argument("class has no bivariate refinement");
  auto& cat = catalog();
  {
    std::scoped_lock lk(cat.mu);
    auto it = cat.biv.find(c);
    if (it != cat.biv.end() && it->second.order() >= T) return it->second.truncated(T);
  }
  WSeries s = compute_bivariate(c, T);
  std::scoped_lock lk(cat.mu);
  auto it = cat.biv.find(c);
  if (it == cat.biv.end() || it->second.order() < s.order()) cat.biv[c] = s;
  return s;
}

Int class_count(GraphClass c, int n, int T) {
  if (n < 0) throw std::invalid_argument("class_count: negative n");
  if (n > T) throw std::runtime_error("raise truncation");
  Rational q = class_series(c, T).c[n];
  if (denominator(q) != 1) throw std::logic_error("class_count: non-integer coefficient");
  return numerator(q);
}

Int forests_by_components(int n, int c) {
  if (n < 1 || c < 1 || c > n) return 0;
  Int num = binomial(n, c - 1) * binomial(3 * n - 2 * c - 1, 2 * n - c - 1);
  Int den = 2 * n - c;
  if (num % den != 0) throw std::logic_error("forests_by_components: non-integer value");
  return num / den;
}

Int single_chain_tree_count(int n) {
  if (n < 1) throw std::invalid_argument("single_chain_tree_count: n must be positive");
  return class_count(GraphClass::MarkedForests, n, std::max(n, 12));
}

}  // namespace nccount
