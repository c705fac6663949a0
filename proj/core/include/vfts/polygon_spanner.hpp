#pragma once

#include <vector>

#include "vfts/cluster_spanner.hpp"
#include "vfts/decomposition.hpp"
#include "vfts/geodesic.hpp"
#include "vfts/separator.hpp"

namespace vfts {

/// Weighted projections of one source point onto a splitting segment.
/// Unrefined: a single geodesic projection. Refined: up to ceil(1/eps^2)
/// piecewise-nearest points inside the projection window.
struct ProjectionSet {
  int source_id = -1;
  std::vector<WeightedPoint> points;  // on the segment; local ids
};

ProjectionSet project_onto_segment(const WeightedPoint& p, const SplittingSegment& seg,
                                   const GeodesicEngine& engine, double eps, bool refine,
                                   int pieces_override = 0);

/// Instrumentation for structural checks; filled when passed to the builders.
struct BuildTrace {
  struct ProjectionEvent {
    SplittingSegment segment;
    std::vector<int> projected_ids;
    std::vector<int> side_a;  // point ids recursed left / into part A
    std::vector<int> side_b;
  };
  struct SplitStat {
    int total, left, right;
  };
  struct SeparatorStat {
    int nodes;
    int separator_size;
    double weight_total, weight_a, weight_b;
  };
  std::vector<ProjectionEvent> events;
  std::vector<SplitStat> splits;
  std::vector<SeparatorStat> separators;
  int max_depth = 0;
};

/// Projects the listed points onto the segment, builds the weighted spanner
/// on the (collinear) projections, and maps its edges back to the sources.
/// Edge lengths are geodesic distances in the root domain.
void edges_from_projection(const std::vector<WeightedPoint>& points,
                           const std::vector<int>& active_ids, const SplittingSegment& seg,
                           const GeodesicEngine& region_engine,
                           const GeodesicEngine& root_engine, int k, double eps, bool refine,
                           SpannerGraph& g, BuildTrace* trace = nullptr,
                           int pieces_override = 0);

/// Geodesic fault-tolerant spanner for weighted points in a simple polygon:
/// balanced chords, projection spanners, recursion on both sides.
SpannerGraph build_vftswp_simple_polygon(const SimplePolygon& poly,
                                         const std::vector<WeightedPoint>& points, int k,
                                         double eps, bool refine,
                                         BuildTrace* trace = nullptr);

/// Geodesic fault-tolerant spanner in a polygonal domain: decomposition,
/// balanced dual separator, projections onto separator-face segments, and
/// recursion into both parts plus the separator faces themselves.
SpannerGraph build_vftswp_domain(const PolygonalDomain& dom,
                                 const std::vector<WeightedPoint>& points, int k, double eps,
                                 bool refine, BuildTrace* trace = nullptr);

}  // namespace vfts
