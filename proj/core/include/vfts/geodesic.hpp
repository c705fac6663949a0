#pragma once

#include <memory>
#include <vector>

#include "vfts/polygon.hpp"

namespace vfts {

/// Polyline shortest path in the free space; interior waypoints are reflex
/// vertices of the domain.
struct GeodesicPath {
  std::vector<Vec2> waypoints;  // source first, target last
  double length = 0.0;
};

/// Shortest-path queries inside a polygonal domain. Simple polygons use
/// triangulation + sleeve + funnel; domains with holes use a visibility
/// graph over the domain vertices. All acceleration structures are built
/// eagerly; queries are const and thread-safe.
class GeodesicEngine {
 public:
  explicit GeodesicEngine(PolygonalDomain dom);
  ~GeodesicEngine();
  GeodesicEngine(GeodesicEngine&&) noexcept;
  GeodesicEngine& operator=(GeodesicEngine&&) noexcept;

  const PolygonalDomain& domain() const;

  GeodesicPath shortest_path(const Vec2& a, const Vec2& b) const;
  double distance(const Vec2& a, const Vec2& b) const;

  struct Projection {
    Vec2 point;       // minimizer on the segment
    double distance;  // geodesic distance from the query point
    double t;         // parameter along [s0, s1]
  };

  /// Geodesic projection of p onto segment [s0, s1]; among equal minimizers
  /// the one closest to s0 wins.
  Projection project(const Vec2& p, const Vec2& s0, const Vec2& s1) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Independent slow oracle: rebuilds a visibility graph per query and runs
/// Bellman-Ford. Shares no search code with GeodesicEngine.
double visibility_oracle_distance(const PolygonalDomain& dom, const Vec2& a, const Vec2& b);

}  // namespace vfts
