#ifndef NCCOUNT_CONSTRUCTIONS_HPP
#define NCCOUNT_CONSTRUCTIONS_HPP

#include "nccount/geometry.hpp"

namespace nccount {

// The three lower-bound constructions on the double chain.  Tree inputs
// build spanning trees, Forest inputs build forests, NoisoForest inputs
// build forests without isolated vertices.
enum class ConstructionVariant { Tree, Forest, NoisoForest };

// Data determining one constructed graph.  Vertices are chain-local:
// upper and lower chains are both indexed 0..n-1 left to right.
//
// Tree: upper_marks has exactly one mark per component of the upper forest.
// Forest: marked components carry one mark each; lower_extra lists isolated
// lower vertices to be attached.  NoisoForest: isolated upper vertices are
// all marked, non-isolated upper components have >= 2 vertices and may
// carry a mark; every lower vertex left isolated is attached at the end.
struct ConstructionInput {
  ConstructionVariant variant = ConstructionVariant::Tree;
  int n = 0;
  std::vector<std::pair<int, int>> upper_edges;
  std::vector<int> upper_marks;    // sorted, unique
  std::vector<int> chosen_marks;   // sorted subset of upper_marks, size k
  std::vector<std::pair<int, int>> lower_edges;
  std::vector<int> lower_targets;  // sorted, size k
  std::vector<int> lower_extra;    // Forest variant only, sorted
};

// Checks the variant preconditions; returns false (with a reason) instead of
// throwing so exhaustive generators can skip invalid data cheaply.
bool validate_construction_input(const ConstructionInput& in, std::string* reason = nullptr);

// Executes the construction steps on the double chain, left to right, with
// visibility meaning "crosses nothing currently drawn".  Returns the edge
// set in double-chain global indices (upper i -> i, lower j -> n + j).
// Throws std::runtime_error("construction stuck") if a step has no visible
// target; this cannot happen for valid inputs.
EdgeSet build_from_data(const ConstructionInput& in, const PointSet& chain);

// All nc forests on n points in convex position, as sorted edge lists
// (chain-local indices).  Used by the exhaustive construction tests.
std::vector<std::vector<std::pair<int, int>>> enumerate_nc_forests(int n);

// Component partition of an edge list on vertices 0..n-1: component id per
// vertex (smallest member).
std::vector<int> component_ids(int n, const std::vector<std::pair<int, int>>& edges);

// All valid inputs of a variant with the given bounds (k <= max_k, and for
// the Forest variant |lower_extra| <= max_m).
std::vector<ConstructionInput> enumerate_inputs(ConstructionVariant variant, int n,
                                                int max_k, int max_m = 2);

}  // namespace nccount

#endif
