#pragma once

#include <vector>

#include "vfts/polygon.hpp"

namespace vfts {

/// A chord of a simple polygon or a segment of the domain decomposition;
/// points are geodesically projected onto these.
struct SplittingSegment {
  Vec2 a;
  Vec2 b;
  enum class Kind { PolygonChord, DomainSegment } kind = Kind::PolygonChord;

  double length() const { return dist(a, b); }
  Vec2 at(double t) const { return a + (b - a) * t; }
};

/// Result of cutting a simple polygon by a balanced chord. Points exactly on
/// the chord are assigned to the left side.
struct PolygonSplit {
  SplittingSegment chord;
  SimplePolygon left;
  SimplePolygon right;
  std::vector<int> left_points;   // indices into the query point list
  std::vector<int> right_points;
};

/// Finds a chord leaving at most ceil(2m/3) of the m points on each side and
/// returns the two sub-polygons with the point assignment.
PolygonSplit splitting_segment_simple(const SimplePolygon& poly, const std::vector<Vec2>& pts);

/// Decomposition of a polygonal domain into simple polygons, each with at
/// most three decomposition segments on its boundary.
struct DomainDecomposition {
  std::vector<SimplePolygon> faces;
  std::vector<SplittingSegment> segments;
  std::vector<std::pair<int, int>> segment_faces;  // faces sharing segments[i]

  /// Face indices adjacent to `face` through each of its segments.
  std::vector<int> segments_of_face(int face) const;

  /// First face (by index) containing p; boundary points go to the lowest
  ///-index face touching them.
  int locate_face(const Vec2& p) const;
};

/// Vertical cuts through the leftmost/rightmost vertex of every hole, then
/// horizontal refinement cuts until every face has at most three segments.
DomainDecomposition decompose_domain(const PolygonalDomain& dom);

/// Connected components of the union of a face subset, each as a polygonal
/// domain (the union may re-enclose holes).
std::vector<PolygonalDomain> union_face_components(const std::vector<SimplePolygon>& faces);

}  // namespace vfts
