#pragma once

#include <vector>

#include "vfts/geometry.hpp"

namespace vfts {

/// Balanced vertex separator of a node-weighted planar graph:
/// nodes partition into (separator, part_a, part_b), no edge joins part_a and
/// part_b, and each part carries at most 2/3 of the total weight.
struct Separator {
  std::vector<int> separator;
  std::vector<int> part_a;
  std::vector<int> part_b;
};

struct WeightedGraph {
  std::vector<double> node_weights;
  std::vector<std::pair<int, int>> edges;

  int size() const { return static_cast<int>(node_weights.size()); }
};

/// Small graphs are searched exhaustively (smallest separator in node order);
/// larger ones use BFS-level cuts augmented with heavy nodes. The returned
/// separator has at most 4 * sqrt(m) nodes.
Separator planar_separator(const WeightedGraph& g);

}  // namespace vfts
