#include "nccount/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace nccount {

namespace {

using Mask = unsigned __int128;

struct Enumerator {
  const PointSet& ps;
  OracleFamily fam;
  std::vector<std::pair<int, int>> cand;
  std::vector<Mask> crossmask;
  int n_vertices;
  bool assert_interior_acyclic = false;

  std::vector<int> parent, csize;
  Mask chosen = 0;
  int chosen_count = 0;
  OracleCensus out;

  explicit Enumerator(const PointSet& p, OracleFamily f) : ps(p), fam(f) {
    n_vertices = ps.size();
    parent.resize(n_vertices);
    csize.assign(n_vertices, 1);
    for (int i = 0; i < n_vertices; ++i) parent[i] = i;
  }

  void build_candidates(bool interior_only, bool reversed) {
    cand.clear();
    if (interior_only) {
      if (ps.config != PointConfig::DoubleChain)
        throw std::invalid_argument("interior forests need a double chain");
      for (int i = 0; i < ps.chain_n; ++i)
        for (int j = 0; j < ps.chain_n; ++j)
          cand.emplace_back(ps.upper(i), ps.lower(j));
    } else {
      for (int a = 0; a < n_vertices; ++a)
        for (int b = a + 1; b < n_vertices; ++b) cand.emplace_back(a, b);
    }
    if (reversed) std::reverse(cand.begin(), cand.end());
    const int m = static_cast<int>(cand.size());
    if (m > 120) throw std::runtime_error("instance too large for oracle");
    crossmask.assign(m, 0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (i != j && segments_cross(ps, cand[i].first, cand[i].second, cand[j].first,
                                     cand[j].second))
          crossmask[i] |= Mask(1) << j;
  }

  int find(int x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }

  void run() {
    rec(0);
  }

  void rec(int idx) {
    if (idx == static_cast<int>(cand.size())) {
      tally();
      return;
    }
    rec(idx + 1);  // exclude
    if (crossmask[idx] & chosen) return;
    int a = find(cand[idx].first), b = find(cand[idx].second);
    if (a == b) {
      if (assert_interior_acyclic)
        throw std::logic_error("interior edge set formed a cycle without a crossing");
      return;
    }
    if (csize[a] < csize[b]) std::swap(a, b);
    parent[b] = a;
    csize[a] += csize[b];
    chosen |= Mask(1) << idx;
    ++chosen_count;
    rec(idx + 1);
    chosen &= ~(Mask(1) << idx);
    --chosen_count;
    csize[a] -= csize[b];
    parent[b] = b;
  }

  void component_sizes(std::vector<int>& sizes) const {
    sizes.clear();
    for (int i = 0; i < n_vertices; ++i)
      if (find(i) == i) sizes.push_back(csize[i]);
  }

  void tally() {
    const int k = chosen_count;
    switch (fam) {
      case OracleFamily::SpanningTrees:
        if (k == n_vertices - 1) out.total += 1;
        break;
      case OracleFamily::MarkedTrees:
        if (k == n_vertices - 1) out.total += n_vertices;
        break;
      case OracleFamily::Forests:
        out.groups[k] += 1;
        out.total += 1;
        break;
      case OracleFamily::ForestsNoiso: {
        if (min_component_size() >= 2 || n_vertices == 0) {
          out.groups[k] += 1;
          out.total += 1;
        }
        break;
      }
      case OracleFamily::InteriorForests:
        if (k >= 1) {
          out.groups[k] += 1;
          out.total += 1;
        }
        break;
      case OracleFamily::ForestsByComponents: {
        int c = n_vertices - k;
        out.groups[c] += 1;
        out.total += 1;
        break;
      }
      case OracleFamily::MarkedForests: {
        std::vector<int> sizes;
        component_sizes(sizes);
        Int w = 1;
        for (int s : sizes) w *= s;
        out.groups[static_cast<long long>(sizes.size())] += w;
        out.total += w;
        break;
      }
      case OracleFamily::MarkedForestsNoiso: {
        std::vector<int> sizes;
        component_sizes(sizes);
        Int w = 1;
        for (int s : sizes) {
          if (s < 2) return;
          w *= s;
        }
        out.groups[static_cast<long long>(sizes.size())] += w;
        out.total += w;
        break;
      }
      case OracleFamily::Mixed:
      case OracleFamily::MixedNoiso: {
        std::vector<int> sizes;
        component_sizes(sizes);
        std::vector<Int> acc{Int(1)};  // polynomial in the mark count
        for (int s : sizes) {
          if (s < 2) {
            if (fam == OracleFamily::MixedNoiso) return;
            continue;  // isolated vertices cannot carry a mark
          }
          std::vector<Int> nxt(acc.size() + 1, Int(0));
          for (size_t i = 0; i < acc.size(); ++i) {
            nxt[i] += acc[i];
            nxt[i + 1] += acc[i] * s;
          }
          acc = std::move(nxt);
        }
        for (size_t i = 0; i < acc.size(); ++i) {
          if (acc[i] == 0) continue;
          out.groups[static_cast<long long>(i)] += acc[i];
          out.total += acc[i];
        }
        break;
      }
    }
  }

  int min_component_size() const {
    int m = n_vertices;
    for (int i = 0; i < n_vertices; ++i)
      if (find(i) == i) m = std::min(m, csize[i]);
    return m;
  }
};

OracleCensus count_impl(const PointSet& ps, OracleFamily family, const OracleOptions& opts,
                        bool reversed) {
  if (ps.size() > opts.cap) throw std::runtime_error("instance too large for oracle");
  Enumerator e(ps, family);
  e.build_candidates(family == OracleFamily::InteriorForests, reversed);
  e.assert_interior_acyclic =
      family == OracleFamily::InteriorForests && ps.chain_n <= 5;
  e.run();
  return std::move(e.out);
}

}  // namespace

OracleCensus count_nc(const PointSet& ps, OracleFamily family, const OracleOptions& opts) {
  return count_impl(ps, family, opts, false);
}

Int spanning_tree_count_double_chain(int n, const OracleOptions& opts) {
  return count_impl(PointSet::double_chain(n), OracleFamily::SpanningTrees, opts, false).total;
}

Int spanning_tree_count_double_chain_reversed(int n, const OracleOptions& opts) {
  return count_impl(PointSet::double_chain(n), OracleFamily::SpanningTrees, opts, true).total;
}

const char* family_name(OracleFamily f) {
  switch (f) {
    case OracleFamily::SpanningTrees: return "spanning-trees";
    case OracleFamily::MarkedTrees: return "marked-trees";
    case OracleFamily::Forests: return "forests";
    case OracleFamily::ForestsNoiso: return "forests-noiso";
    case OracleFamily::InteriorForests: return "interior-forests";
    case OracleFamily::ForestsByComponents: return "forests-by-components";
    case OracleFamily::MarkedForests: return "marked-forests";
    case OracleFamily::MarkedForestsNoiso: return "marked-forests-noiso";
    case OracleFamily::Mixed: return "mixed";
    case OracleFamily::MixedNoiso: return "mixed-noiso";
  }
  return "?";
}

bool family_from_name(const std::string& s, OracleFamily& out) {
  for (OracleFamily f :
       {OracleFamily::SpanningTrees, OracleFamily::MarkedTrees, OracleFamily::Forests,
        OracleFamily::ForestsNoiso, OracleFamily::InteriorForests,
        OracleFamily::ForestsByComponents, OracleFamily::MarkedForests,
        OracleFamily::MarkedForestsNoiso, OracleFamily::Mixed, OracleFamily::MixedNoiso}) {
    if (s == family_name(f)) {
      out = f;
      return true;
    }
  }
  return false;
}

}  // namespace nccount
