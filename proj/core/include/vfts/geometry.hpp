#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace vfts {

/// Raised on any violated input precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr double kEpsAbs = 1e-9;       // comparison tolerance on unit-box instances
constexpr double kEpsBoundary = 1e-12; // boundary snap for containment tests

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
};

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Vec2& a) { return std::hypot(a.x, a.y); }
inline double dist(const Vec2& a, const Vec2& b) { return norm(a - b); }

/// Signed area of triangle (a, b, c); > 0 for counterclockwise.
inline double orient(const Vec2& a, const Vec2& b, const Vec2& c) {
  return cross(b - a, c - a);
}

enum class Side { Left, Right, On };

inline Side side_of(const Vec2& a, const Vec2& b, const Vec2& p, double tol = kEpsBoundary) {
  double o = orient(a, b, p);
  if (o > tol) return Side::Left;
  if (o < -tol) return Side::Right;
  return Side::On;
}

/// True if p lies on the closed segment [a, b] within tol.
bool on_segment(const Vec2& a, const Vec2& b, const Vec2& p, double tol = kEpsBoundary);

/// Proper or improper intersection test for closed segments [a,b] and [c,d].
bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d);

/// True if the open interiors of [a,b] and [c,d] cross at a single point.
bool segments_cross_properly(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d);

/// Closest point of the closed segment [a,b] to p (Euclidean).
Vec2 closest_point_on_segment(const Vec2& a, const Vec2& b, const Vec2& p);

/// Euclidean distance in R^d between coordinate vectors of equal length.
double euclid(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace vfts
