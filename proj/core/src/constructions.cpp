#include "nccount/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace nccount {

std::vector<int> component_ids(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto& [a, b] : edges) {
    int ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = find(i);
  return out;
}

namespace {

bool sorted_unique_in_range(const std::vector<int>& v, int n) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0 || v[i] >= n) return false;
    if (i > 0 && v[i] <= v[i - 1]) return false;
  }
  return true;
}

bool is_subset(const std::vector<int>& sub, const std::vector<int>& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

// Non-crossing on convex position: chords (a,b), (c,d) cross iff the pairs
// strictly interleave.
bool convex_cross(std::pair<int, int> e, std::pair<int, int> f) {
  int a = std::min(e.first, e.second), b = std::max(e.first, e.second);
  int c = std::min(f.first, f.second), d = std::max(f.first, f.second);
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

bool valid_chain_forest(const std::vector<std::pair<int, int>>& edges, int n) {
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < edges.size(); ++i) {
    auto [a, b] = edges[i];
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) return false;
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;  // cycle
    parent[ra] = rb;
    for (size_t j = 0; j < i; ++j)
      if (convex_cross(edges[i], edges[j])) return false;
  }
  return true;
}

std::vector<int> degrees(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> d(n, 0);
  for (auto& [a, b] : edges) {
    d[a]++;
    d[b]++;
  }
  return d;
}

}  // namespace

bool validate_construction_input(const ConstructionInput& in, std::string* reason) {
  auto fail = [&](const char* why) {
    if (reason) *reason = why;
    return false;
  };
  const int n = in.n;
  if (n < 1) return fail("n must be positive");
  if (!valid_chain_forest(in.upper_edges, n)) return fail("upper edges are not an nc forest");
  if (!valid_chain_forest(in.lower_edges, n)) return fail("lower edges are not an nc forest");
  if (!sorted_unique_in_range(in.upper_marks, n)) return fail("marks not sorted/unique");
  if (!sorted_unique_in_range(in.chosen_marks, n)) return fail("chosen marks not sorted/unique");
  if (!sorted_unique_in_range(in.lower_targets, n)) return fail("lower targets not sorted/unique");
  if (!sorted_unique_in_range(in.lower_extra, n)) return fail("lower extras not sorted/unique");
  if (!is_subset(in.chosen_marks, in.upper_marks)) return fail("chosen marks not among marks");
  if (in.chosen_marks.size() != in.lower_targets.size())
    return fail("mark/target matching sizes differ");

  auto comp = component_ids(n, in.upper_edges);
  std::map<int, int> marks_per_comp;
  for (int i = 0; i < n; ++i) marks_per_comp[comp[i]] = 0;
  for (int m : in.upper_marks) marks_per_comp[comp[m]]++;
  for (auto& [c, cnt] : marks_per_comp)
    if (cnt > 1) return fail("two marks in one upper component");

  auto udeg = degrees(n, in.upper_edges);
  auto ldeg = degrees(n, in.lower_edges);

  switch (in.variant) {
    case ConstructionVariant::Tree: {
      for (auto& [c, cnt] : marks_per_comp)
        if (cnt != 1) return fail("tree variant: every upper component needs one mark");
      if (in.chosen_marks.empty()) return fail("tree variant: k must be at least 1");
      if (!in.lower_extra.empty()) return fail("tree variant has no extra subset");
      break;
    }
    case ConstructionVariant::Forest: {
      if (in.upper_marks.empty() != in.chosen_marks.empty())
        return fail("forest variant: marks present but none chosen");
      for (int t : in.lower_targets)
        if (ldeg[t] == 0) return fail("forest variant: target is isolated in the lower forest");
      for (int v : in.lower_extra)
        if (ldeg[v] != 0) return fail("forest variant: extra vertex not isolated");
      if (!in.lower_extra.empty() && in.upper_marks.empty())
        return fail("forest variant: extras need at least one mark");
      break;
    }
    case ConstructionVariant::NoisoForest: {
      for (int i = 0; i < n; ++i)
        if (udeg[i] == 0 &&
            !std::binary_search(in.upper_marks.begin(), in.upper_marks.end(), i))
          return fail("noiso variant: isolated upper vertex must be marked");
      if (in.upper_marks.empty() != in.chosen_marks.empty())
        return fail("noiso variant: marks present but none chosen");
      // Lower vertices end up attached to marks; they must exist if anything
      // on the lower chain can stay isolated.
      if (in.upper_marks.empty()) {
        auto isolated = false;
        for (int j = 0; j < n; ++j)
          if (ldeg[j] == 0) isolated = true;
        if (isolated) return fail("noiso variant: isolated lower vertices need marks");
      }
      if (!in.lower_extra.empty()) return fail("noiso variant has no extra subset");
      break;
    }
  }
  if (reason) reason->clear();
  return true;
}

namespace {

struct Drawing {
  const PointSet& ps;
  EdgeSet edges;

  bool visible(int a, int b) const {
    for (auto& [c, d] : edges.edges)
      if (segments_cross(ps, a, b, c, d)) return false;
    return true;
  }
  void add(int a, int b) { edges.add(a, b); }
};

}  // namespace

EdgeSet build_from_data(const ConstructionInput& in, const PointSet& chain) {
  std::string why;
  if (!validate_construction_input(in, &why))
    throw std::invalid_argument("build_from_data: invalid input: " + why);
  if (chain.config != PointConfig::DoubleChain || chain.chain_n != in.n)
    throw std::invalid_argument("build_from_data: point set is not the right double chain");
  const int n = in.n;
  auto up = [&](int i) { return chain.upper(i); };
  auto lo = [&](int j) { return chain.lower(j); };

  Drawing d{chain, {}};
  for (auto& [a, b] : in.upper_edges) d.add(up(a), up(b));
  for (auto& [a, b] : in.lower_edges) d.add(lo(a), lo(b));

  // Step 1: match the chosen marks with the lower targets, in order.
  for (size_t i = 0; i < in.chosen_marks.size(); ++i)
    d.add(up(in.chosen_marks[i]), lo(in.lower_targets[i]));

  // Step 2: remaining marks join the leftmost visible matched vertex.
  for (int m : in.upper_marks) {
    if (std::binary_search(in.chosen_marks.begin(), in.chosen_marks.end(), m)) continue;
    bool done = false;
    for (int t : in.lower_targets) {
      if (d.visible(up(m), lo(t))) {
        d.add(up(m), lo(t));
        done = true;
        break;
      }
    }
    if (!done) throw std::runtime_error("construction stuck");
  }

  auto rightmost_visible_mark = [&](int v_global) -> int {
    for (auto it = in.upper_marks.rbegin(); it != in.upper_marks.rend(); ++it)
      if (d.visible(up(*it), v_global)) return *it;
    throw std::runtime_error("construction stuck");
  };

  switch (in.variant) {
    case ConstructionVariant::Tree: {
      // Step 3: lower components without a matched vertex hook their
      // leftmost vertex to the rightmost visible mark.
      auto lcomp = component_ids(n, in.lower_edges);
      std::set<int> covered;  // lower components touching a target
      for (int t : in.lower_targets) covered.insert(lcomp[t]);
      for (int rep = 0; rep < n; ++rep) {
        if (lcomp[rep] != rep || covered.count(rep)) continue;
        d.add(up(rightmost_visible_mark(lo(rep))), lo(rep));
      }
      // Step 4: if still disconnected, chain the components together by
      // their leftmost marks, ordered left to right.
      auto comp = components(chain.size(), d.edges);
      std::map<int, int> leftmost_mark;  // component -> mark
      for (int m : in.upper_marks) {
        int c = comp[up(m)];
        if (!leftmost_mark.count(c)) leftmost_mark[c] = m;  // marks scanned left to right
      }
      std::vector<std::pair<int, int>> order;  // (mark, component)
      for (auto& [c, m] : leftmost_mark) order.emplace_back(m, c);
      std::sort(order.begin(), order.end());
      for (size_t i = 1; i < order.size(); ++i) {
        int joiner = order[i].first;
        int prev_comp = order[i - 1].second;
        bool done = false;
        for (auto it = in.lower_targets.rbegin(); it != in.lower_targets.rend(); ++it) {
          if (comp[lo(*it)] != prev_comp) continue;
          if (d.visible(up(joiner), lo(*it))) {
            d.add(up(joiner), lo(*it));
            done = true;
            break;
          }
        }
        if (!done) throw std::runtime_error("construction stuck");
      }
      break;
    }
    case ConstructionVariant::Forest: {
      // Step 3: the chosen isolated lower vertices hook to the rightmost
      // visible mark.
      for (int v : in.lower_extra) d.add(up(rightmost_visible_mark(lo(v))), lo(v));
      break;
    }
    case ConstructionVariant::NoisoForest: {
      // Step 3: every lower vertex still isolated hooks to the rightmost
      // visible mark.
      std::vector<int> deg(chain.size(), 0);
      for (auto& [a, b] : d.edges.edges) {
        deg[a]++;
        deg[b]++;
      }
      for (int j = 0; j < n; ++j)
        if (deg[lo(j)] == 0) d.add(up(rightmost_visible_mark(lo(j))), lo(j));
      break;
    }
  }
  return d.edges;
}

std::vector<std::vector<std::pair<int, int>>> enumerate_nc_forests(int n) {
  std::vector<std::pair<int, int>> all;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> cur;
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == all.size()) {
      out.push_back(cur);
      return;
    }
    rec(idx + 1);
    cur.push_back(all[idx]);
    if (valid_chain_forest(cur, n)) rec(idx + 1);
    cur.pop_back();
  };
  rec(0);
  for (auto& f : out) std::sort(f.begin(), f.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void subsets_of_size(const std::vector<int>& base, int k,
                     std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    if (idx == base.size()) return;
    if (static_cast<int>(base.size() - idx + cur.size()) < k) return;
    cur.push_back(base[idx]);
    rec(idx + 1);
    cur.pop_back();
    rec(idx + 1);
  };
  rec(0);
}

// All ways to mark components with one vertex each.  mark_all forces every
// component to carry a mark; otherwise each component may stay unmarked.
// With min_size_two, single-vertex components are never marked here (the
// noiso enumeration adds their forced marks separately).
void mark_assignments(int n, const std::vector<std::pair<int, int>>& edges,
                      bool mark_all, bool min_size_two,
                      std::vector<std::vector<int>>& out) {
  auto comp = component_ids(n, edges);
  std::map<int, std::vector<int>> members;
  for (int i = 0; i < n; ++i) members[comp[i]].push_back(i);
  std::vector<std::vector<int>> comp_list;
  for (auto& [c, mem] : members) comp_list.push_back(mem);
  std::vector<int> cur;
  std::function<void(size_t)> rec = [&](size_t ci) {
    if (ci == comp_list.size()) {
      std::vector<int> sorted = cur;
      std::sort(sorted.begin(), sorted.end());
      out.push_back(std::move(sorted));
      return;
    }
    const auto& mem = comp_list[ci];
    bool may_mark = !min_size_two || mem.size() >= 2;
    if (!mark_all || !may_mark) rec(ci + 1);  // leave unmarked
    if (may_mark)
      for (int v : mem) {
        cur.push_back(v);
        rec(ci + 1);
        cur.pop_back();
      }
  };
  rec(0);
}

}  // namespace

std::vector<ConstructionInput> enumerate_inputs(ConstructionVariant variant, int n,
                                                int max_k, int max_m) {
  auto forests = enumerate_nc_forests(n);
  std::vector<ConstructionInput> out;

  for (const auto& fu : forests) {
    std::vector<std::vector<int>> markings;
    if (variant == ConstructionVariant::Tree) {
      mark_assignments(n, fu, /*mark_all=*/true, /*min_size_two=*/false, markings);
    } else if (variant == ConstructionVariant::Forest) {
      mark_assignments(n, fu, /*mark_all=*/false, /*min_size_two=*/false, markings);
    } else {
      // isolated vertices must be marked; larger components optional
      auto comp = component_ids(n, fu);
      std::map<int, int> size_of;
      for (int i = 0; i < n; ++i) size_of[comp[i]]++;
      std::vector<std::vector<int>> partial;
      mark_assignments(n, fu, /*mark_all=*/false, /*min_size_two=*/true, partial);
      for (auto& m : partial) {
        std::vector<int> full = m;
        for (int i = 0; i < n; ++i)
          if (size_of[comp[i]] == 1) full.push_back(i);
        std::sort(full.begin(), full.end());
        full.erase(std::unique(full.begin(), full.end()), full.end());
        markings.push_back(std::move(full));
      }
      std::sort(markings.begin(), markings.end());
      markings.erase(std::unique(markings.begin(), markings.end()), markings.end());
    }

    for (const auto& fl : forests) {
      std::vector<int> lower_all, lower_noniso, lower_iso;
      auto ldeg = degrees(n, fl);
      for (int j = 0; j < n; ++j) {
        lower_all.push_back(j);
        (ldeg[j] ? lower_noniso : lower_iso).push_back(j);
      }
      for (const auto& marks : markings) {
        for (int k = 1; k <= max_k; ++k) {
          if (k > static_cast<int>(marks.size())) break;
          std::vector<std::vector<int>> chosen_sets;
          subsets_of_size(marks, k, chosen_sets);
          std::vector<std::vector<int>> target_sets;
          subsets_of_size(variant == ConstructionVariant::Forest ? lower_noniso : lower_all,
                          k, target_sets);
          for (auto& ch : chosen_sets) {
            for (auto& tg : target_sets) {
              ConstructionInput in;
              in.variant = variant;
              in.n = n;
              in.upper_edges = fu;
              in.upper_marks = marks;
              in.chosen_marks = ch;
              in.lower_edges = fl;
              in.lower_targets = tg;
              if (variant == ConstructionVariant::Forest) {
                for (int m = 0; m <= std::min(max_m, static_cast<int>(lower_iso.size()));
                     ++m) {
                  std::vector<std::vector<int>> extra_sets;
                  subsets_of_size(lower_iso, m, extra_sets);
                  for (auto& ex : extra_sets) {
                    in.lower_extra = ex;
                    if (validate_construction_input(in)) out.push_back(in);
                  }
                }
                in.lower_extra.clear();
              } else {
                if (validate_construction_input(in)) out.push_back(in);
              }
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace nccount
