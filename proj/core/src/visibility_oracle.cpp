#include <cmath>
#include <limits>
#include <vector>

#include "vfts/geodesic.hpp"

namespace vfts {

// Brute-force cross-check: complete visibility graph over all domain
// vertices plus the two query points, relaxed with Bellman-Ford.
double visibility_oracle_distance(const PolygonalDomain& dom, const Vec2& a, const Vec2& b) {
  if (!dom.in_free_space(a) || !dom.in_free_space(b))
    throw InvalidInput("point outside free space");
  if (dist(a, b) == 0.0) return 0.0;

  std::vector<Vec2> nodes = dom.all_vertices();
  nodes.push_back(a);
  nodes.push_back(b);
  const int n = static_cast<int>(nodes.size());
  const int src = n - 2, dst = n - 1;

  struct Arc {
    int u, v;
    double len;
  };
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (dist(nodes[i], nodes[j]) == 0.0) continue;
      if (dom.segment_in_free_space(nodes[i], nodes[j]))
        arcs.push_back({i, j, dist(nodes[i], nodes[j])});
    }
  }

  std::vector<double> d(n, std::numeric_limits<double>::infinity());
  d[src] = 0.0;
  for (int round = 0; round < n; ++round) {
    bool changed = false;
    for (const auto& arc : arcs) {
      if (d[arc.u] + arc.len < d[arc.v]) {
        d[arc.v] = d[arc.u] + arc.len;
        changed = true;
      }
      if (d[arc.v] + arc.len < d[arc.u]) {
        d[arc.u] = d[arc.v] + arc.len;
        changed = true;
      }
    }
    if (!changed) break;
  }
  if (!std::isfinite(d[dst])) throw InvalidInput("oracle found no path");
  return d[dst];
}

}  // namespace vfts
