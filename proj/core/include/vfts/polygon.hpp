#pragma once

#include <vector>

#include "vfts/geometry.hpp"

namespace vfts {

/// Counterclockwise simple polygon; validated on construction.
class SimplePolygon {
 public:
  SimplePolygon() = default;
  explicit SimplePolygon(std::vector<Vec2> vertices, bool validate = true);

  const std::vector<Vec2>& vertices() const { return verts_; }
  std::size_t size() const { return verts_.size(); }
  const Vec2& vertex(std::size_t i) const { return verts_[i % verts_.size()]; }

  double signed_area() const;

  /// Even-odd containment; points within kEpsBoundary of the boundary count
  /// as inside (closed polygon).
  bool contains(const Vec2& p) const;
  bool on_boundary(const Vec2& p, double tol = kEpsBoundary) const;

  /// Reversed vertex order (flips orientation).
  SimplePolygon reversed() const;

 private:
  std::vector<Vec2> verts_;
};

struct Triangle {
  int a, b, c;  // indices into the triangulated vertex list
};

/// Ear-clipping triangulation; returns triangles over poly.vertices() indices.
std::vector<Triangle> triangulate(const SimplePolygon& poly);

/// Outer simple polygon plus pairwise-disjoint holes strictly inside it.
/// Free space = closure of outer minus open hole interiors.
class PolygonalDomain {
 public:
  PolygonalDomain() = default;
  explicit PolygonalDomain(SimplePolygon outer, std::vector<SimplePolygon> holes = {},
                           bool validate = true);

  const SimplePolygon& outer() const { return outer_; }
  const std::vector<SimplePolygon>& holes() const { return holes_; }
  std::size_t hole_count() const { return holes_.size(); }

  bool in_free_space(const Vec2& p) const;
  bool on_boundary(const Vec2& p, double tol = kEpsBoundary) const;

  /// True if the closed segment [a, b] stays in the free space.
  bool segment_in_free_space(const Vec2& a, const Vec2& b) const;

  /// All boundary vertices (outer then holes, in order).
  std::vector<Vec2> all_vertices() const;

  /// Reflex vertices of the free space: reflex corners of the outer polygon
  /// and convex corners of holes (as seen from the free space).
  std::vector<Vec2> reflex_vertices() const;

 private:
  SimplePolygon outer_;
  std::vector<SimplePolygon> holes_;  // stored counterclockwise internally
};

}  // namespace vfts
