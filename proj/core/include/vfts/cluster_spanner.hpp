#pragma once

#include <map>
#include <vector>

#include "vfts/base_vfts.hpp"
#include "vfts/core_metric.hpp"

namespace vfts {

/// Weight-ordered clustering: a point joins its nearest center's cluster when
/// the distance is at most eps * w(p), else it opens a new cluster.
struct Clustering {
  std::vector<int> centers;                 // point ids, creation order
  std::map<int, int> assignment;            // point id -> cluster index
  std::vector<std::vector<int>> members;    // per cluster, insertion (weight) order
};

Clustering cluster(const std::vector<WeightedPoint>& points, int k, double eps);

/// Full weighted-point fault-tolerant spanner in R^d: base spanner over the
/// cluster centers plus, per non-center point, edges to the least-weight
/// cluster members and to the center's nearest base-spanner neighbors.
SpannerGraph build_vftswp_rd(const std::vector<WeightedPoint>& points, int k, double eps,
                             double t_base = 0.0 /* 0 -> 2 + eps */);

}  // namespace vfts
