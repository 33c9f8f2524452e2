#ifndef NCCOUNT_ORACLE_HPP
#define NCCOUNT_ORACLE_HPP

#include "nccount/geometry.hpp"

#include <map>
#include <string>

namespace nccount {

// Brute-force census families.  Marked families count each forest with
// multiplicity equal to its number of markings (one distinguished vertex per
// component, restricted to non-isolated components for the Mixed families).
enum class OracleFamily {
  SpanningTrees,
  MarkedTrees,          // spanning trees weighted by the number of vertices
  Forests,
  ForestsNoiso,         // no isolated vertex
  InteriorForests,      // interior edges of the double chain only, >= 1 edge
  ForestsByComponents,  // grouped by component count
  MarkedForests,        // every component marked, grouped by component count
  MarkedForestsNoiso,   // no isolated vertex, every component marked
  Mixed,                // non-isolated components optionally marked, grouped by marks
  MixedNoiso,           // no isolated vertex, components optionally marked
};

struct OracleCensus {
  std::map<long long, Int> groups;  // statistic value -> weighted count
  Int total = 0;
};

struct OracleOptions {
  int cap = 12;  // maximum total points
};

// Exact census by backtracking over candidate edges in a fixed order,
// pruning on crossings and cycles.  Throws std::runtime_error
// ("instance too large for oracle") above the cap.
OracleCensus count_nc(const PointSet& ps, OracleFamily family,
                      const OracleOptions& opts = {});

// Exact number of nc spanning trees of the double chain on 2n points.
Int spanning_tree_count_double_chain(int n, const OracleOptions& opts = {});
// Same count with the candidate-edge order reversed (independent check).
Int spanning_tree_count_double_chain_reversed(int n, const OracleOptions& opts = {});

const char* family_name(OracleFamily f);
bool family_from_name(const std::string& s, OracleFamily& out);

}  // namespace nccount

#endif
