#ifndef NCCOUNT_GEOMETRY_HPP
#define NCCOUNT_GEOMETRY_HPP

#include "nccount/numeric.hpp"

#include <array>
#include <set>
#include <utility>

namespace nccount {

enum class PointConfig { Convex, DoubleChain, SingleChain };

// Labeled points with integer coordinates.  All predicates use exact integer
// orientation determinants; construction verifies the configuration
// invariants exhaustively (no three collinear, chain separation, hull shape).
struct PointSet {
  std::vector<std::array<Int, 2>> pts;
  PointConfig config = PointConfig::Convex;
  int chain_n = 0;  // per-chain size (DoubleChain) or lower-chain size (SingleChain)

  int size() const { return static_cast<int>(pts.size()); }

  // Double chain index helpers: upper chain 0..n-1 (left to right), lower
  // chain n..2n-1 (left to right).
  int upper(int i) const { return i; }
  int lower(int j) const { return chain_n + j; }
  bool is_upper(int v) const { return v < chain_n; }

  // Single chain: lower chain 0..n-1, apex index n.
  int apex() const { return chain_n; }

  // Points in convex position on an integer parabola.
  static PointSet convex(int n);
  // Same cyclic order on a large circle, labels rotated by `rotation`;
  // exercises the convex-position-only dependence of censuses.
  static PointSet convex_circle(int n, int rotation = 0);

  // Two mutually concave chains of n points each; every line through two
  // points of one chain leaves the whole other chain on one side.
  static PointSet double_chain(int n);
  // A second valid realization with different coordinates.
  static PointSet double_chain_alt(int n);

  // n points in convex position bulging toward a single apex; the convex
  // hull is a triangle.
  static PointSet single_chain(int n);
};

// Sign of the orientation determinant (a, b, c): >0 counterclockwise.
int orientation(const PointSet& ps, int a, int b, int c);

// True iff the open segments (a,b) and (c,d) intersect; segments sharing an
// endpoint do not cross.
bool segments_cross(const PointSet& ps, int a, int b, int c, int d);

// Geometric graph as a set of vertex-index pairs, with recomputed flags.
struct EdgeSet {
  std::vector<std::pair<int, int>> edges;  // normalized a < b

  void add(int a, int b) {
    if (a > b) std::swap(a, b);
    edges.emplace_back(a, b);
  }
  bool contains(int a, int b) const {
    if (a > b) std::swap(a, b);
    for (auto& e : edges)
      if (e.first == a && e.second == b) return true;
    return false;
  }
  size_t size() const { return edges.size(); }
};

bool crossing_free(const PointSet& ps, const EdgeSet& g);
bool is_forest(const PointSet& ps, const EdgeSet& g);
bool is_spanning_tree(const PointSet& ps, const EdgeSet& g);
bool has_isolated_vertex(const PointSet& ps, const EdgeSet& g);

// Connected component id per vertex (smallest-index representative).
std::vector<int> components(int n_vertices, const EdgeSet& g);

}  // namespace nccount

#endif
