#include "vfts/polygon.hpp"

#include <algorithm>
#include <cmath>

namespace vfts {

namespace {

double polygon_signed_area(const std::vector<Vec2>& v) {
  double a = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2& p = v[i];
    const Vec2& q = v[(i + 1) % v.size()];
    a += cross(p, q);
  }
  return 0.5 * a;
}

bool edges_self_intersect(const std::vector<Vec2>& v) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // adjacent edges share a vertex, skip
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
      if (segments_cross_properly(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n])) return true;
    }
  }
  return false;
}

}  // namespace

SimplePolygon::SimplePolygon(std::vector<Vec2> vertices, bool validate)
    : verts_(std::move(vertices)) {
  if (verts_.size() < 3) throw InvalidInput("polygon needs at least 3 vertices");
  if (validate) {
    if (polygon_signed_area(verts_) <= 0.0)
      throw InvalidInput("polygon must be counterclockwise with positive area");
    if (edges_self_intersect(verts_)) throw InvalidInput("polygon self-intersects");
  }
}

double SimplePolygon::signed_area() const { return polygon_signed_area(verts_); }

bool SimplePolygon::on_boundary(const Vec2& p, double tol) const {
  const std::size_t n = verts_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (on_segment(verts_[i], verts_[(i + 1) % n], p, tol)) return true;
  }
  return false;
}

bool SimplePolygon::contains(const Vec2& p) const {
  if (on_boundary(p)) return true;
  // even-odd rule
  bool inside = false;
  const std::size_t n = verts_.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2& a = verts_[j];
    const Vec2& b = verts_[i];
    if ((b.y > p.y) != (a.y > p.y)) {
      double xint = b.x + (p.y - b.y) * (a.x - b.x) / (a.y - b.y);
      if (p.x < xint) inside = !inside;
    }
  }
  return inside;
}

SimplePolygon SimplePolygon::reversed() const {
  std::vector<Vec2> v(verts_.rbegin(), verts_.rend());
  return SimplePolygon(std::move(v), false);
}

std::vector<Triangle> triangulate(const SimplePolygon& poly) {
  const auto& v = poly.vertices();
  const int n = static_cast<int>(v.size());
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;

  std::vector<Triangle> tris;
  tris.reserve(n - 2);

  auto is_ear = [&](int pos) {
    const int m = static_cast<int>(idx.size());
    int ia = idx[(pos + m - 1) % m];
    int ib = idx[pos];
    int ic = idx[(pos + 1) % m];
    const Vec2 &a = v[ia], &b = v[ib], &c = v[ic];
    double o = orient(a, b, c);
    if (o <= kEpsBoundary) return false;  // reflex or degenerate corner
    for (int j = 0; j < m; ++j) {
      int iv = idx[j];
      if (iv == ia || iv == ib || iv == ic) continue;
      const Vec2& p = v[iv];
      double o1 = orient(a, b, p);
      double o2 = orient(b, c, p);
      double o3 = orient(c, a, p);
      if (o1 >= -kEpsBoundary && o2 >= -kEpsBoundary && o3 >= -kEpsBoundary) return false;
    }
    return true;
  };

  int guard = 0;
  while (idx.size() > 3) {
    const int m = static_cast<int>(idx.size());
    bool clipped = false;
    for (int pos = 0; pos < m; ++pos) {
      if (is_ear(pos)) {
        int ia = idx[(pos + m - 1) % m];
        int ib = idx[pos];
        int ic = idx[(pos + 1) % m];
        tris.push_back({ia, ib, ic});
        idx.erase(idx.begin() + pos);
        clipped = true;
        break;
      }
    }
    if (!clipped) {
      // Degenerate corner (collinear); drop the flattest vertex.
      int best = -1;
      double besto = std::numeric_limits<double>::max();
      for (int pos = 0; pos < m; ++pos) {
        int ia = idx[(pos + m - 1) % m];
        int ib = idx[pos];
        int ic = idx[(pos + 1) % m];
        double o = std::abs(orient(v[ia], v[ib], v[ic]));
        if (o < besto) {
          besto = o;
          best = pos;
        }
      }
      if (besto > kEpsAbs || best < 0) throw InvalidInput("triangulation failed: no ear found");
      idx.erase(idx.begin() + best);
    }
    if (++guard > 4 * n * n) throw InvalidInput("triangulation did not terminate");
  }
  if (idx.size() == 3) tris.push_back({idx[0], idx[1], idx[2]});
  return tris;
}

PolygonalDomain::PolygonalDomain(SimplePolygon outer, std::vector<SimplePolygon> holes,
                                 bool validate)
    : outer_(std::move(outer)) {
  holes_.reserve(holes.size());
  for (auto& h : holes) {
    // normalize to counterclockwise storage
    if (h.signed_area() < 0.0)
      holes_.push_back(h.reversed());
    else
      holes_.push_back(std::move(h));
  }
  if (!validate) return;
  for (std::size_t i = 0; i < holes_.size(); ++i) {
    for (const auto& p : holes_[i].vertices()) {
      if (!outer_.contains(p) || outer_.on_boundary(p))
        throw InvalidInput("hole vertex not strictly inside outer polygon");
    }
    for (std::size_t j = i + 1; j < holes_.size(); ++j) {
      const auto& a = holes_[i].vertices();
      const auto& b = holes_[j].vertices();
      for (std::size_t ii = 0; ii < a.size(); ++ii)
        for (std::size_t jj = 0; jj < b.size(); ++jj)
          if (segments_intersect(a[ii], a[(ii + 1) % a.size()], b[jj],
                                 b[(jj + 1) % b.size()]))
            throw InvalidInput("holes intersect");
      if (holes_[i].contains(b[0]) || holes_[j].contains(a[0]))
        throw InvalidInput("nested holes");
    }
  }
}

bool PolygonalDomain::on_boundary(const Vec2& p, double tol) const {
  if (outer_.on_boundary(p, tol)) return true;
  for (const auto& h : holes_)
    if (h.on_boundary(p, tol)) return true;
  return false;
}

bool PolygonalDomain::in_free_space(const Vec2& p) const {
  if (on_boundary(p)) return true;
  if (!outer_.contains(p)) return false;
  for (const auto& h : holes_)
    if (h.contains(p) && !h.on_boundary(p)) return false;
  return true;
}

bool PolygonalDomain::segment_in_free_space(const Vec2& a, const Vec2& b) const {
  auto edge_blocks = [&](const Vec2& c, const Vec2& d) {
    return segments_cross_properly(a, b, c, d);
  };
  std::vector<double> ts{0.0, 1.0};
  auto collect = [&](const std::vector<Vec2>& v) {
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2& c = v[i];
      const Vec2& d = v[(i + 1) % n];
      if (edge_blocks(c, d)) return false;
      Vec2 ab = b - a;
      double len2 = dot(ab, ab);
      if (len2 == 0.0) continue;
      if (on_segment(a, b, c)) ts.push_back(dot(c - a, ab) / len2);
      if (on_segment(a, b, d)) ts.push_back(dot(d - a, ab) / len2);
    }
    return true;
  };
  if (!collect(outer_.vertices())) return false;
  for (const auto& h : holes_)
    if (!collect(h.vertices())) return false;
  std::sort(ts.begin(), ts.end());
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    double mid = 0.5 * (ts[i] + ts[i + 1]);
    if (mid <= 0.0 || mid >= 1.0) continue;
    if (!in_free_space(a + (b - a) * mid)) return false;
  }
  return in_free_space(a) && in_free_space(b);
}

std::vector<Vec2> PolygonalDomain::all_vertices() const {
  std::vector<Vec2> out(outer_.vertices());
  for (const auto& h : holes_)
    out.insert(out.end(), h.vertices().begin(), h.vertices().end());
  return out;
}

std::vector<Vec2> PolygonalDomain::reflex_vertices() const {
  std::vector<Vec2> out;
  const auto& ov = outer_.vertices();
  const std::size_t n = ov.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (orient(ov[(i + n - 1) % n], ov[i], ov[(i + 1) % n]) < -kEpsBoundary)
      out.push_back(ov[i]);
  }
  for (const auto& h : holes_) {
    const auto& hv = h.vertices();
    const std::size_t m = hv.size();
    for (std::size_t i = 0; i < m; ++i) {
      if (orient(hv[(i + m - 1) % m], hv[i], hv[(i + 1) % m]) > kEpsBoundary)
        out.push_back(hv[i]);
    }
  }
  return out;
}

}  // namespace vfts
