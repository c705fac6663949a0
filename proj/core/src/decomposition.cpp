#include "vfts/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <set>

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>

namespace vfts {

namespace bg = boost::geometry;
using BPoint = bg::model::d2::point_xy<double>;
using BPoly = bg::model::polygon<BPoint, false, true>;  // ccw, closed
using BMulti = bg::model::multi_polygon<BPoly>;

namespace {

constexpr double kSliverArea = 1e-12;
constexpr double kLineTol = 1e-9;

BPoly to_boost(const PolygonalDomain& dom) {
  BPoly poly;
  for (const auto& v : dom.outer().vertices()) bg::append(poly.outer(), BPoint(v.x, v.y));
  for (const auto& h : dom.holes()) {
    poly.inners().emplace_back();
    for (const auto& v : h.vertices())
      bg::append(poly.inners().back(), BPoint(v.x, v.y));
  }
  bg::correct(poly);
  return poly;
}

BPoly to_boost(const SimplePolygon& p) {
  BPoly poly;
  for (const auto& v : p.vertices()) bg::append(poly.outer(), BPoint(v.x, v.y));
  bg::correct(poly);
  return poly;
}

std::vector<Vec2> ring_to_verts(const BPoly::ring_type& ring) {
  std::vector<Vec2> verts;
  for (const auto& bp : ring) {
    Vec2 v{bg::get<0>(bp), bg::get<1>(bp)};
    if (verts.empty() || dist(verts.back(), v) > kEpsBoundary) verts.push_back(v);
  }
  if (verts.size() > 1 && dist(verts.front(), verts.back()) <= kEpsBoundary)
    verts.pop_back();
  return verts;
}

// boost rings are clockwise-free here (ccw template); outer ccw, inners cw
SimplePolygon ring_to_polygon(const BPoly::ring_type& ring) {
  auto verts = ring_to_verts(ring);
  double area = 0.0;
  for (std::size_t i = 0; i < verts.size(); ++i)
    area += cross(verts[i], verts[(i + 1) % verts.size()]);
  if (area < 0.0) std::reverse(verts.begin(), verts.end());
  return SimplePolygon(std::move(verts), false);
}

BPoly band(double x0, double x1, double y0, double y1) {
  BPoly b;
  bg::append(b.outer(), BPoint(x0, y0));
  bg::append(b.outer(), BPoint(x1, y0));
  bg::append(b.outer(), BPoint(x1, y1));
  bg::append(b.outer(), BPoint(x0, y1));
  bg::correct(b);
  return b;
}

// Maximal positive-length overlaps of collinear boundary edges between two
// simple polygons.
std::vector<std::pair<Vec2, Vec2>> shared_boundary(const SimplePolygon& a,
                                                   const SimplePolygon& b) {
  struct Interval {
    Vec2 origin, dir;  // unit direction of the carrier line
    double lo, hi;
  };
  std::vector<Interval> raw;
  const auto& av = a.vertices();
  const auto& bv = b.vertices();
  for (std::size_t i = 0; i < av.size(); ++i) {
    Vec2 p = av[i], q = av[(i + 1) % av.size()];
    Vec2 d = q - p;
    double len = norm(d);
    if (len <= kEpsBoundary) continue;
    Vec2 u = d * (1.0 / len);
    for (std::size_t j = 0; j < bv.size(); ++j) {
      Vec2 r = bv[j], s = bv[(j + 1) % bv.size()];
      // collinearity of [r,s] with the line through [p,q]
      if (std::abs(cross(u, r - p)) > kLineTol || std::abs(cross(u, s - p)) > kLineTol)
        continue;
      double t0 = dot(r - p, u), t1 = dot(s - p, u);
      if (t0 > t1) std::swap(t0, t1);
      double lo = std::max(0.0, t0), hi = std::min(len, t1);
      if (hi - lo > kLineTol) raw.push_back({p, u, lo, hi});
    }
  }
  // merge intervals sharing a carrier line
  std::vector<std::pair<Vec2, Vec2>> out;
  std::vector<bool> used(raw.size(), false);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (used[i]) continue;
    double lo = raw[i].lo, hi = raw[i].hi;
    for (std::size_t j = i + 1; j < raw.size(); ++j) {
      if (used[j]) continue;
      // same carrier line?
      if (std::abs(cross(raw[i].dir, raw[j].dir)) > kLineTol) continue;
      if (std::abs(cross(raw[i].dir, raw[j].origin - raw[i].origin)) > kLineTol) continue;
      double shift = dot(raw[j].origin - raw[i].origin, raw[i].dir);
      double sgn = dot(raw[j].dir, raw[i].dir) > 0 ? 1.0 : -1.0;
      double jlo = shift + sgn * raw[j].lo, jhi = shift + sgn * raw[j].hi;
      if (jlo > jhi) std::swap(jlo, jhi);
      if (jlo <= hi + kLineTol && jhi >= lo - kLineTol) {
        lo = std::min(lo, jlo);
        hi = std::max(hi, jhi);
        used[j] = true;
      }
    }
    out.push_back({raw[i].origin + raw[i].dir * lo, raw[i].origin + raw[i].dir * hi});
  }
  return out;
}

void rebuild_adjacency(DomainDecomposition& dec) {
  dec.segments.clear();
  dec.segment_faces.clear();
  for (std::size_t i = 0; i < dec.faces.size(); ++i) {
    for (std::size_t j = i + 1; j < dec.faces.size(); ++j) {
      for (auto& [p, q] : shared_boundary(dec.faces[i], dec.faces[j])) {
        dec.segments.push_back({p, q, SplittingSegment::Kind::DomainSegment});
        dec.segment_faces.push_back({static_cast<int>(i), static_cast<int>(j)});
      }
    }
  }
}

}  // namespace

std::vector<int> DomainDecomposition::segments_of_face(int face) const {
  std::vector<int> out;
  for (std::size_t s = 0; s < segment_faces.size(); ++s)
    if (segment_faces[s].first == face || segment_faces[s].second == face)
      out.push_back(static_cast<int>(s));
  return out;
}

int DomainDecomposition::locate_face(const Vec2& p) const {
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (faces[i].contains(p)) return static_cast<int>(i);
  return -1;
}

DomainDecomposition decompose_domain(const PolygonalDomain& dom) {
  DomainDecomposition dec;
  if (dom.hole_count() == 0) {
    dec.faces.push_back(dom.outer());
    return dec;
  }

  double xmin = std::numeric_limits<double>::max(), xmax = -xmin;
  double ymin = xmin, ymax = xmax;
  for (const auto& v : dom.outer().vertices()) {
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }

  // cut abscissae: leftmost and rightmost vertex of every hole
  std::vector<double> cuts;
  for (const auto& h : dom.holes()) {
    double lo = std::numeric_limits<double>::max(), hi = -lo;
    for (const auto& v : h.vertices()) {
      lo = std::min(lo, v.x);
      hi = std::max(hi, v.x);
    }
    cuts.push_back(lo);
    cuts.push_back(hi);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [](double a, double b) { return std::abs(a - b) < kEpsBoundary; }),
             cuts.end());

  const BPoly free_space = to_boost(dom);
  const double pad = 1.0 + (xmax - xmin);
  std::vector<double> bounds{xmin - pad};
  bounds.insert(bounds.end(), cuts.begin(), cuts.end());
  bounds.push_back(xmax + pad);

  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    BMulti pieces;
    bg::intersection(free_space, band(bounds[i], bounds[i + 1], ymin - pad, ymax + pad),
                     pieces);
    for (const auto& piece : pieces) {
      if (!piece.inners().empty())
        throw InvalidInput("decomposition produced a non-simple face");
      if (std::abs(bg::area(piece)) < kSliverArea) continue;
      dec.faces.push_back(ring_to_polygon(piece.outer()));
    }
  }

  rebuild_adjacency(dec);

  // refinement: horizontal cuts until every face touches <= 3 segments
  int guard = 0;
  const int max_rounds = 64 + 16 * static_cast<int>(dom.hole_count());
  while (true) {
    int worst = -1;
    std::size_t worst_count = 3;
    for (std::size_t f = 0; f < dec.faces.size(); ++f) {
      std::size_t c = dec.segments_of_face(static_cast<int>(f)).size();
      if (c > worst_count) {
        worst = static_cast<int>(f);
        worst_count = c;
      }
    }
    if (worst < 0) break;
    if (++guard > max_rounds) throw InvalidInput("face refinement did not converge");

    auto segs = dec.segments_of_face(worst);
    std::vector<double> mids;
    for (int s : segs) mids.push_back(0.5 * (dec.segments[s].a.y + dec.segments[s].b.y));
    std::sort(mids.begin(), mids.end());
    double cut_y = 0.5 * (mids[mids.size() / 2 - 1] + mids[mids.size() / 2]);

    BPoly face = to_boost(dec.faces[worst]);
    BMulti lowers, uppers;
    bg::intersection(face, band(xmin - pad, xmax + pad, ymin - pad, cut_y), lowers);
    bg::intersection(face, band(xmin - pad, xmax + pad, cut_y, ymax + pad), uppers);
    std::vector<SimplePolygon> replacement;
    for (const auto* multi : {&lowers, &uppers}) {
      for (const auto& piece : *multi) {
        if (!piece.inners().empty())
          throw InvalidInput("refinement produced a non-simple face");
        if (std::abs(bg::area(piece)) < kSliverArea) continue;
        replacement.push_back(ring_to_polygon(piece.outer()));
      }
    }
    if (replacement.size() < 2) throw InvalidInput("refinement cut made no progress");
    dec.faces.erase(dec.faces.begin() + worst);
    dec.faces.insert(dec.faces.end(), replacement.begin(), replacement.end());
    rebuild_adjacency(dec);
  }
  return dec;
}

std::vector<PolygonalDomain> union_face_components(const std::vector<SimplePolygon>& faces) {
  if (faces.empty()) return {};
  BMulti acc;
  acc.push_back(to_boost(faces[0]));
  for (std::size_t i = 1; i < faces.size(); ++i) {
    BMulti next;
    bg::union_(acc, to_boost(faces[i]), next);
    acc = std::move(next);
  }
  std::vector<PolygonalDomain> out;
  for (const auto& poly : acc) {
    SimplePolygon outer = ring_to_polygon(poly.outer());
    std::vector<SimplePolygon> holes;
    for (const auto& inner : poly.inners()) holes.push_back(ring_to_polygon(inner));
    out.emplace_back(std::move(outer), std::move(holes), false);
  }
  return out;
}

// ---- splitting segments for simple polygons ----

namespace {

// Inserts chord endpoints into the boundary cycle and walks the two loops.
std::pair<SimplePolygon, SimplePolygon> cut_polygon(const SimplePolygon& poly, const Vec2& a,
                                                    const Vec2& b) {
  const auto& v = poly.vertices();
  const std::size_t n = v.size();
  std::vector<Vec2> loop;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 &p = v[i], &q = v[(i + 1) % n];
    loop.push_back(p);
    std::vector<std::pair<double, Vec2>> ins;
    Vec2 d = q - p;
    double len2 = dot(d, d);
    for (const Vec2& c : {a, b}) {
      if (on_segment(p, q, c, 1e-9) && dist(c, p) > 1e-12 && dist(c, q) > 1e-12)
        ins.push_back({dot(c - p, d) / len2, c});
    }
    std::sort(ins.begin(), ins.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [t, c] : ins) loop.push_back(c);
  }

  auto find_pos = [&](const Vec2& c) {
    for (std::size_t i = 0; i < loop.size(); ++i)
      if (dist(loop[i], c) <= 1e-12) return static_cast<int>(i);
    throw InvalidInput("chord endpoint not on polygon boundary");
  };
  int ia = find_pos(a), ib = find_pos(b);

  auto walk = [&](int from, int to) {
    std::vector<Vec2> out;
    for (int i = from;; i = (i + 1) % static_cast<int>(loop.size())) {
      out.push_back(loop[i]);
      if (i == to) break;
    }
    return out;
  };

  std::vector<Vec2> first = walk(ia, ib);   // a .. b, close with chord b->a
  std::vector<Vec2> second = walk(ib, ia);  // b .. a, close with chord a->b
  if (first.size() < 3 || second.size() < 3) throw InvalidInput("degenerate chord");
  return {SimplePolygon(std::move(first), false), SimplePolygon(std::move(second), false)};
}

double polygon_area_abs(const SimplePolygon& p) { return std::abs(p.signed_area()); }

struct CandidateSplit {
  PolygonSplit split;
  int max_side = 0;
  bool ok = false;
};

CandidateSplit try_chord(const SimplePolygon& poly, const std::vector<Vec2>& pts,
                         const Vec2& a, const Vec2& b) {
  CandidateSplit cand;
  if (dist(a, b) <= 1e-9) return cand;
  if (!poly.contains(a + (b - a) * 0.5)) return cand;
  try {
    auto [first, second] = cut_polygon(poly, a, b);
    if (polygon_area_abs(first) < kSliverArea || polygon_area_abs(second) < kSliverArea)
      return cand;
    // left sub-polygon = the one lying left of the directed chord a -> b
    auto is_left = [&](const SimplePolygon& sp) {
      for (const auto& v : sp.vertices()) {
        double o = orient(a, b, v);
        if (std::abs(o) > 1e-9) return o > 0.0;
      }
      return false;
    };
    PolygonSplit s;
    s.chord = {a, b, SplittingSegment::Kind::PolygonChord};
    if (is_left(first)) {
      s.left = first;
      s.right = second;
    } else {
      s.left = second;
      s.right = first;
    }
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
      if (on_segment(a, b, pts[i], 1e-9))
        s.left_points.push_back(i);
      else if (s.left.contains(pts[i]))
        s.left_points.push_back(i);
      else if (s.right.contains(pts[i]))
        s.right_points.push_back(i);
      else
        return cand;  // assignment failed; reject chord
    }
    cand.max_side = static_cast<int>(
        std::max(s.left_points.size(), s.right_points.size()));
    cand.split = std::move(s);
    cand.ok = true;
  } catch (const InvalidInput&) {
    cand.ok = false;
  }
  return cand;
}

// Maximal free segments of the polygon along a vertical or horizontal line.
std::vector<std::pair<Vec2, Vec2>> line_chords(const SimplePolygon& poly, bool vertical,
                                               double c) {
  const auto& v = poly.vertices();
  std::vector<double> hits;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2 &p = v[i], &q = v[(i + 1) % v.size()];
    double pa = vertical ? p.x : p.y;
    double qa = vertical ? q.x : q.y;
    if ((pa > c) == (qa > c)) continue;
    double t = (c - pa) / (qa - pa);
    hits.push_back(vertical ? p.y + t * (q.y - p.y) : p.x + t * (q.x - p.x));
  }
  std::sort(hits.begin(), hits.end());
  std::vector<std::pair<Vec2, Vec2>> out;
  for (std::size_t i = 0; i + 1 < hits.size(); i += 2) {
    Vec2 a = vertical ? Vec2{c, hits[i]} : Vec2{hits[i], c};
    Vec2 b = vertical ? Vec2{c, hits[i + 1]} : Vec2{hits[i + 1], c};
    if (dist(a, b) > 1e-9 && poly.contains(a + (b - a) * 0.5)) out.push_back({a, b});
  }
  return out;
}

}  // namespace

PolygonSplit splitting_segment_simple(const SimplePolygon& poly, const std::vector<Vec2>& pts) {
  if (pts.empty()) throw InvalidInput("empty point set");
  const int m = static_cast<int>(pts.size());
  const int bound = (2 * m + 2) / 3;  // ceil(2m/3)

  CandidateSplit best;
  // both the balance bound and strict progress (no side keeps all m points)
  auto acceptable = [&](const CandidateSplit& c) {
    return c.ok && c.max_side <= bound && (m < 2 || c.max_side < m);
  };
  auto consider = [&](const Vec2& a, const Vec2& b) {
    if (acceptable(best)) return;  // first acceptable candidate wins
    auto cand = try_chord(poly, pts, a, b);
    if (!cand.ok) return;
    if (!best.ok || cand.max_side < best.max_side) best = std::move(cand);
  };

  // triangulation diagonals first (the classic polygon-cutting choice)
  const auto& v = poly.vertices();
  const std::size_t n = v.size();
  auto tris = triangulate(poly);
  std::set<std::pair<int, int>> diagonals;
  for (const auto& t : tris) {
    int ids[3] = {t.a, t.b, t.c};
    for (int e = 0; e < 3; ++e) {
      int x = ids[e], y = ids[(e + 1) % 3];
      if ((x + 1) % static_cast<int>(n) == y || (y + 1) % static_cast<int>(n) == x) continue;
      diagonals.insert(std::minmax(x, y));
    }
  }
  for (auto [x, y] : diagonals) {
    consider(v[x], v[y]);
    if (acceptable(best)) return best.split;
  }

  // axis-aligned chords between consecutive point coordinates
  for (bool vertical : {true, false}) {
    std::vector<double> coords;
    for (const auto& p : pts) coords.push_back(vertical ? p.x : p.y);
    std::sort(coords.begin(), coords.end());
    for (std::size_t i = 0; i + 1 < coords.size(); ++i) {
      if (coords[i + 1] - coords[i] < 1e-12) continue;
      double c = 0.5 * (coords[i] + coords[i + 1]);
      for (auto& [a, b] : line_chords(poly, vertical, c)) {
        consider(a, b);
        if (acceptable(best)) return best.split;
      }
    }
  }

  // chords from each vertex through angular gaps between the points
  for (std::size_t vi = 0; vi < n; ++vi) {
    std::vector<double> angs;
    for (const auto& p : pts) {
      if (dist(p, v[vi]) > 1e-12) angs.push_back(std::atan2(p.y - v[vi].y, p.x - v[vi].x));
    }
    std::sort(angs.begin(), angs.end());
    for (std::size_t i = 0; i < angs.size(); ++i) {
      double a0 = angs[i];
      double a1 = (i + 1 < angs.size()) ? angs[i + 1] : angs[0] + 2 * std::numbers::pi;
      double mid = 0.5 * (a0 + a1);
      // shoot from the vertex to the first boundary hit
      Vec2 dir{std::cos(mid), std::sin(mid)};
      double tbest = std::numeric_limits<double>::max();
      for (std::size_t e = 0; e < n; ++e) {
        const Vec2 &p = v[e], &q = v[(e + 1) % n];
        double denom = cross(dir, q - p);
        if (std::abs(denom) < 1e-15) continue;
        double t = cross(p - v[vi], q - p) / denom;
        double u = cross(p - v[vi], dir) / denom;
        if (t > 1e-9 && u >= -1e-12 && u <= 1.0 + 1e-12) tbest = std::min(tbest, t);
      }
      if (tbest == std::numeric_limits<double>::max()) continue;
      consider(v[vi], v[vi] + dir * tbest);
      if (acceptable(best)) return best.split;
    }
  }

  if (acceptable(best)) return best.split;
  throw InvalidInput("no balanced splitting segment found");
}

}  // namespace vfts
