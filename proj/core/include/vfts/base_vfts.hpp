#pragma once

#include <vector>

#include "vfts/core_metric.hpp"

namespace vfts {

/// Parameters for the unweighted fault-tolerant base spanner.
struct BaseSpannerParams {
  int k = 1;          // tolerated vertex failures
  double t_base = 2.5;  // target stretch, > 1

  BaseSpannerParams() = default;
  BaseSpannerParams(int k_, double t) : k(k_), t_base(t) {
    if (k < 0) throw InvalidInput("k must be non-negative");
    if (t <= 1.0) throw InvalidInput("base stretch must exceed 1");
  }

  /// Smallest cone count c >= 4 with 1 / (1 - 2 sin(pi/c)) <= t_base.
  int cone_count() const;
};

/// Builds a (k, t_base)-vertex-fault-tolerant spanner for unweighted points.
/// In the plane: per cone, each point connects to its k+1 nearest points in
/// that cone. Collinear inputs degenerate to k+1 nearest per direction.
/// For d >= 3 a well-separated-pair construction is used instead.
SpannerGraph build_base_vfts(const std::vector<std::vector<double>>& points,
                             const BaseSpannerParams& params);

/// Among vertices adjacent to v, the k with smallest Euclidean distance to v
/// (ties by smaller index); all of them if the degree is below k.
std::vector<int> k_nearest_neighbors_in_graph(const SpannerGraph& g,
                                              const std::vector<std::vector<double>>& points,
                                              int v, int k);

}  // namespace vfts
