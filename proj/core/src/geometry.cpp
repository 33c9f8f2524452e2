#include "nccount/geometry.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace nccount {

int orientation(const PointSet& ps, int a, int b, int c) {
  const auto& A = ps.pts[a];
  const auto& B = ps.pts[b];
  const auto& C = ps.pts[c];
  Int d = (B[0] - A[0]) * (C[1] - A[1]) - (B[1] - A[1]) * (C[0] - A[0]);
  return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

bool segments_cross(const PointSet& ps, int a, int b, int c, int d) {
  if (a == b || c == d) throw std::invalid_argument("segments_cross: degenerate segment");
  if (a == c || a == d || b == c || b == d) return false;  // shared endpoint
  int o1 = orientation(ps, a, b, c);
  int o2 = orientation(ps, a, b, d);
  int o3 = orientation(ps, c, d, a);
  int o4 = orientation(ps, c, d, b);
  if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return true;
  // Collinear cases (excluded by construction invariants, handled anyway):
  // open segments overlap iff a collinear point lies strictly inside.
  auto strictly_between = [&](int p, int q, int r) {  // r on open segment (p,q)?
    if (orientation(ps, p, q, r) != 0) return false;
    const auto& P = ps.pts[p];
    const auto& Q = ps.pts[q];
    const auto& R = ps.pts[r];
    Int lo0 = std::min(P[0], Q[0]), hi0 = std::max(P[0], Q[0]);
    Int lo1 = std::min(P[1], Q[1]), hi1 = std::max(P[1], Q[1]);
    bool inside = (lo0 < R[0] && R[0] < hi0) || (lo1 < R[1] && R[1] < hi1);
    return inside;
  };
  return strictly_between(a, b, c) || strictly_between(a, b, d) ||
         strictly_between(c, d, a) || strictly_between(c, d, b);
}

namespace {

bool no_three_collinear(const PointSet& ps) {
  int n = ps.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (orientation(ps, a, b, c) == 0) return false;
  return true;
}

// Every line through two members of `chain` keeps all of `others` strictly
// on one side.
bool separates(const PointSet& ps, const std::vector<int>& chain,
               const std::vector<int>& others) {
  for (size_t i = 0; i < chain.size(); ++i)
    for (size_t j = i + 1; j < chain.size(); ++j) {
      int side = 0;
      for (int v : others) {
        int o = orientation(ps, chain[i], chain[j], v);
        if (o == 0) return false;
        if (side == 0) side = o;
        else if (o != side) return false;
      }
    }
  return true;
}

// Interior chain points lie strictly on the `others` side of every chord:
// the chain bulges toward the other chain, so interior edges are never
// blocked by chain edges.
bool mutually_concave(const PointSet& ps, const std::vector<int>& chain,
                      int other_ref) {
  for (size_t a = 0; a < chain.size(); ++a)
    for (size_t b = a + 2; b < chain.size(); ++b)
      for (size_t c = a + 1; c < b; ++c) {
        int oc = orientation(ps, chain[a], chain[b], chain[c]);
        int oo = orientation(ps, chain[a], chain[b], other_ref);
        if (oc == 0 || oc != oo) return false;
      }
  return true;
}

bool convex_position(const PointSet& ps, const std::vector<int>& idx) {
  // Every point is a hull vertex: for each pair, all remaining points on one
  // side, or the pair is a hull edge of the subset; simplest exhaustive
  // check: no point inside a triangle of three others.
  int n = static_cast<int>(idx.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (d == a || d == b || d == c) continue;
          int o1 = orientation(ps, idx[a], idx[b], idx[d]);
          int o2 = orientation(ps, idx[b], idx[c], idx[d]);
          int o3 = orientation(ps, idx[c], idx[a], idx[d]);
          if (o1 != 0 && o1 == o2 && o2 == o3) return false;  // strictly inside
        }
  return true;
}

void verify_double_chain(const PointSet& ps) {
  int n = ps.chain_n;
  std::vector<int> up, lo;
  for (int i = 0; i < n; ++i) up.push_back(ps.upper(i));
  for (int j = 0; j < n; ++j) lo.push_back(ps.lower(j));
  if (!no_three_collinear(ps)) throw std::runtime_error("double chain: collinear triple");
  if (n >= 2) {
    if (!separates(ps, up, lo) || !separates(ps, lo, up))
      throw std::runtime_error("double chain: separation property fails");
  }
  if (n >= 3) {
    if (!mutually_concave(ps, up, lo[0]) || !mutually_concave(ps, lo, up[0]))
      throw std::runtime_error("double chain: chains do not face each other");
  }
}

void verify_single_chain(const PointSet& ps) {
  int n = ps.chain_n;
  if (!no_three_collinear(ps)) throw std::runtime_error("single chain: collinear triple");
  std::vector<int> chain;
  for (int j = 0; j < n; ++j) chain.push_back(j);
  if (n >= 2 && !separates(ps, chain, {ps.apex()}))
    throw std::runtime_error("single chain: apex not separated");
  if (n >= 3 && !mutually_concave(ps, chain, ps.apex()))
    throw std::runtime_error("single chain: chain does not face the apex");
  if (!convex_position(ps, chain))
    throw std::runtime_error("single chain: chain not in convex position");
  // Triangular hull: every interior chain point lies inside the triangle
  // (apex, leftmost, rightmost).
  for (int j = 1; j + 1 < n; ++j) {
    int o1 = orientation(ps, ps.apex(), 0, j);
    int o2 = orientation(ps, 0, n - 1, j);
    int o3 = orientation(ps, n - 1, ps.apex(), j);
    if (!(o1 != 0 && o1 == o2 && o2 == o3))
      throw std::runtime_error("single chain: hull is not a triangle");
  }
}

}  // namespace

PointSet PointSet::convex(int n) {
  if (n < 1) throw std::invalid_argument("convex: n must be positive");
  PointSet ps;
  ps.config = PointConfig::Convex;
  ps.chain_n = n;
  for (int i = 0; i < n; ++i) ps.pts.push_back({Int(i), Int(i) * i});
  return ps;
}

PointSet PointSet::convex_circle(int n, int rotation) {
  if (n < 1) throw std::invalid_argument("convex_circle: n must be positive");
  PointSet ps;
  ps.config = PointConfig::Convex;
  ps.chain_n = n;
  ps.pts.resize(n);
  for (double radius = 1e6;; radius *= 7) {
    for (int i = 0; i < n; ++i) {
      int slot = (i + rotation) % n;
      double ang = 2.0 * M_PI * slot / n + 0.37;
      ps.pts[i] = {Int(llround(radius * std::cos(ang))),
                   Int(llround(radius * std::sin(ang)))};
    }
    if (no_three_collinear(ps) && [&] {
          std::vector<int> all(n);
          for (int i = 0; i < n; ++i) all[i] = i;
          return convex_position(ps, all);
        }())
      return ps;
    if (radius > 1e15) throw std::runtime_error("convex_circle: placement failed");
  }
}

namespace {

PointSet build_double_chain(int n, const Int& offset, const Int& scale) {
  PointSet ps;
  ps.config = PointConfig::DoubleChain;
  ps.chain_n = n;
  Int c = offset;
  for (int shift = 0; shift <= n + 4; ++shift) {
    ps.pts.clear();
    for (int i = 0; i < n; ++i)
      ps.pts.push_back({Int(i), c + scale * i * i + shift});  // upper, facing down
    for (int j = 0; j < n; ++j)
      ps.pts.push_back({Int(j), -c - scale * j * j});  // lower, facing up
    try {
      verify_double_chain(ps);
      return ps;
    } catch (const std::runtime_error&) {
      // nudge the upper chain and retry
    }
  }
  throw std::runtime_error("double chain: could not realize configuration");
}

}  // namespace

PointSet PointSet::double_chain(int n) {
  if (n < 1) throw std::invalid_argument("double_chain: n must be positive");
  return build_double_chain(n, Int(3) * n * n, 1);
}

PointSet PointSet::double_chain_alt(int n) {
  if (n < 1) throw std::invalid_argument("double_chain_alt: n must be positive");
  return build_double_chain(n, Int(5) * n * n + 1, 2);
}

PointSet PointSet::single_chain(int n) {
  if (n < 1) throw std::invalid_argument("single_chain: n must be positive");
  PointSet ps;
  ps.config = PointConfig::SingleChain;
  ps.chain_n = n;
  Int apex_y = Int(3) * n * n * n + 2;
  for (int shift = 0; shift <= n + 4; ++shift) {
    ps.pts.clear();
    for (int j = 0; j < n; ++j) ps.pts.push_back({Int(j), -Int(j) * j});
    ps.pts.push_back({Int((n - 1) / 2), apex_y + shift});
    try {
      verify_single_chain(ps);
      return ps;
    } catch (const std::runtime_error&) {
    }
  }
  throw std::runtime_error("single chain: could not realize configuration");
}

bool crossing_free(const PointSet& ps, const EdgeSet& g) {
  for (size_t i = 0; i < g.edges.size(); ++i)
    for (size_t j = i + 1; j < g.edges.size(); ++j)
      if (segments_cross(ps, g.edges[i].first, g.edges[i].second, g.edges[j].first,
                         g.edges[j].second))
        return false;
  return true;
}

std::vector<int> components(int n_vertices, const EdgeSet& g) {
  std::vector<int> parent(n_vertices);
  for (int i = 0; i < n_vertices; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto& e : g.edges) {
    int a = find(e.first), b = find(e.second);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> comp(n_vertices);
  for (int i = 0; i < n_vertices; ++i) comp[i] = find(i);
  return comp;
}

bool is_forest(const PointSet& ps, const EdgeSet& g) {
  std::vector<int> parent(ps.size());
  for (int i = 0; i < ps.size(); ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto& e : g.edges) {
    int a = find(e.first), b = find(e.second);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

bool is_spanning_tree(const PointSet& ps, const EdgeSet& g) {
  if (static_cast<int>(g.edges.size()) != ps.size() - 1) return false;
  if (!is_forest(ps, g)) return false;
  auto comp = components(ps.size(), g);
  for (int i = 0; i < ps.size(); ++i)
    if (comp[i] != comp[0]) return false;
  return true;
}

bool has_isolated_vertex(const PointSet& ps, const EdgeSet& g) {
  std::vector<int> deg(ps.size(), 0);
  for (auto& e : g.edges) {
    deg[e.first]++;
    deg[e.second]++;
  }
  for (int i = 0; i < ps.size(); ++i)
    if (deg[i] == 0) return true;
  return false;
}

}  // namespace nccount
