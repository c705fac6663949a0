#include "vfts/polygon_spanner.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

namespace vfts {

namespace {

constexpr double kOnSegmentTol = 1e-12;

int recursion_cap(std::size_t n) {
  // ceil(log_{3/2} n) + slack
  double depth = std::log(std::max<double>(2.0, static_cast<double>(n))) / std::log(1.5);
  return static_cast<int>(std::ceil(depth)) + 4;
}

}  // namespace

ProjectionSet project_onto_segment(const WeightedPoint& p, const SplittingSegment& seg,
                                   const GeodesicEngine& engine, double eps, bool refine,
                                   int pieces_override) {
  if (eps <= 0.0) throw InvalidInput("eps must be positive");
  ProjectionSet out;
  out.source_id = p.id;

  auto proj = engine.project(p.xy(), seg.a, seg.b);
  if (!refine) {
    out.points.emplace_back(proj.point, p.weight + proj.distance, 0);
    return out;
  }
  if (proj.distance <= kOnSegmentTol) {
    // p lies on the segment
    out.points.emplace_back(proj.point, p.weight, 0);
    return out;
  }

  const double seg_len = seg.length();
  const double window = (1.0 + 2.0 * eps) * proj.distance;
  double t_lo = std::max(0.0, proj.t - window / seg_len);
  double t_hi = std::min(1.0, proj.t + window / seg_len);
  const int pieces =
      pieces_override > 0 ? pieces_override : static_cast<int>(std::ceil(1.0 / (eps * eps)));

  for (int j = 0; j < pieces; ++j) {
    double a = t_lo + (t_hi - t_lo) * j / pieces;
    double b = t_lo + (t_hi - t_lo) * (j + 1) / pieces;
    auto pj = engine.project(p.xy(), seg.at(a), seg.at(b));
    out.points.emplace_back(pj.point, p.weight + pj.distance, j);
  }
  return out;
}

void edges_from_projection(const std::vector<WeightedPoint>& points,
                           const std::vector<int>& active_ids, const SplittingSegment& seg,
                           const GeodesicEngine& region_engine,
                           const GeodesicEngine& root_engine, int k, double eps, bool refine,
                           SpannerGraph& g, BuildTrace* trace, int pieces_override) {
  if (active_ids.size() < 2) return;

  std::vector<WeightedPoint> proj_points;
  std::vector<int> back;  // local projection id -> source point id
  std::size_t max_copies = 1;
  for (int id : active_ids) {
    ProjectionSet ps =
        project_onto_segment(points[id], seg, region_engine, eps, refine, pieces_override);
    max_copies = std::max(max_copies, ps.points.size());
    for (auto& wp : ps.points) {
      proj_points.emplace_back(wp.coords, wp.weight, static_cast<int>(proj_points.size()));
      back.push_back(id);
    }
  }
  if (trace) {
    BuildTrace::ProjectionEvent ev;
    ev.segment = seg;
    ev.projected_ids = active_ids;
    trace->events.push_back(std::move(ev));
  }

  // Deleting one source removes all of its projection copies, so the
  // projection spanner must tolerate k * max_copies vertex faults for the
  // stretch guarantee to transfer back to the sources.
  int k_proj = static_cast<int>(std::min<std::size_t>(
      k * max_copies, proj_points.empty() ? 0 : proj_points.size() - 1));
  SpannerGraph proj_graph = build_vftswp_rd(proj_points, k_proj, eps);
  for (const auto& e : proj_graph.edges()) {
    int p = back[e.u], q = back[e.v];
    if (p == q) continue;
    double len = root_engine.distance(points[p].xy(), points[q].xy());
    g.add_edge(p, q, len);
  }
}

namespace {

struct PolygonBuilder {
  const std::vector<WeightedPoint>& points;
  const GeodesicEngine& root;
  int k;
  double eps;
  bool refine;
  SpannerGraph& g;
  BuildTrace* trace;
  int depth_cap;

  void run_simple(const SimplePolygon& region, const std::vector<int>& ids, int depth) {
    if (ids.size() <= 1) return;
    if (depth > depth_cap) throw InvalidInput("splitting recursion exceeded depth bound");
    if (trace) trace->max_depth = std::max(trace->max_depth, depth);

    GeodesicEngine engine{PolygonalDomain(region, {}, false)};
    std::vector<Vec2> coords;
    coords.reserve(ids.size());
    for (int id : ids) coords.push_back(points[id].xy());

    PolygonSplit split = splitting_segment_simple(region, coords);
    edges_from_projection(points, ids, split.chord, engine, root, k, eps, refine, g,
                          trace);
    std::vector<int> left_ids, right_ids;
    for (int i : split.left_points) left_ids.push_back(ids[i]);
    for (int i : split.right_points) right_ids.push_back(ids[i]);
    if (trace) {
      trace->splits.push_back({static_cast<int>(ids.size()),
                               static_cast<int>(left_ids.size()),
                               static_cast<int>(right_ids.size())});
      trace->events.back().side_a = left_ids;
      trace->events.back().side_b = right_ids;
    }
    run_simple(split.left, left_ids, depth + 1);
    run_simple(split.right, right_ids, depth + 1);
  }

  void run_domain(const PolygonalDomain& region, const std::vector<int>& ids, int depth) {
    if (ids.size() <= 1 && region.hole_count() == 0) return;
    if (depth > 8 * depth_cap) throw InvalidInput("domain recursion exceeded depth bound");
    if (region.hole_count() == 0) {
      run_simple(region.outer(), ids, depth);
      return;
    }

    DomainDecomposition dec = decompose_domain(region);
    if (dec.faces.size() == 1) {
      run_simple(dec.faces[0], ids, depth);
      return;
    }

    // node weights = points per face
    std::vector<int> face_of(ids.size());
    WeightedGraph dual;
    dual.node_weights.assign(dec.faces.size(), 0.0);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      int f = dec.locate_face(points[ids[i]].xy());
      if (f < 0) throw InvalidInput("point escaped the decomposition");
      face_of[i] = f;
      dual.node_weights[f] += 1.0;
    }
    std::set<std::pair<int, int>> dual_edges(dec.segment_faces.begin(),
                                             dec.segment_faces.end());
    dual.edges.assign(dual_edges.begin(), dual_edges.end());

    Separator sep = planar_separator(dual);

    std::set<int> in_a(sep.part_a.begin(), sep.part_a.end());
    std::set<int> in_b(sep.part_b.begin(), sep.part_b.end());
    std::vector<int> ids_a, ids_b;
    std::map<int, std::vector<int>> ids_sep;  // separator face -> its point ids
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (in_a.count(face_of[i]))
        ids_a.push_back(ids[i]);
      else if (in_b.count(face_of[i]))
        ids_b.push_back(ids[i]);
      else
        ids_sep[face_of[i]].push_back(ids[i]);
    }

    if (trace) {
      double wa = 0.0, wb = 0.0, wt = 0.0;
      for (double w : dual.node_weights) wt += w;
      for (int f : sep.part_a) wa += dual.node_weights[f];
      for (int f : sep.part_b) wb += dual.node_weights[f];
      trace->separators.push_back({dual.size(), static_cast<int>(sep.separator.size()), wt,
                                   wa, wb});
      trace->max_depth = std::max(trace->max_depth, depth);
    }

    GeodesicEngine engine{region};

    // project everything onto every segment bounding a separator face
    std::set<int> seg_ids;
    for (int f : sep.separator)
      for (int s : dec.segments_of_face(f)) seg_ids.insert(s);
    for (int s : seg_ids) {
      edges_from_projection(points, ids, dec.segments[s], engine, root, k, eps, refine, g,
                            trace);
      if (trace) {
        trace->events.back().side_a = ids_a;
        trace->events.back().side_b = ids_b;
      }
    }

    // separator faces are processed as simple polygons
    for (auto& [f, fids] : ids_sep) run_simple(dec.faces[f], fids, depth + 1);

    // recurse into both parts, component by component
    for (const auto* part : {&sep.part_a, &sep.part_b}) {
      if (part->empty()) continue;
      std::vector<SimplePolygon> faces;
      for (int f : *part) faces.push_back(dec.faces[f]);
      const std::vector<int>& part_ids = (part == &sep.part_a) ? ids_a : ids_b;
      auto components = union_face_components(faces);
      if (components.size() == 1) {
        run_domain(components[0], part_ids, depth + 1);
      } else {
        std::vector<std::vector<int>> comp_ids(components.size());
        for (int id : part_ids) {
          bool placed = false;
          for (std::size_t c = 0; c < components.size() && !placed; ++c) {
            if (components[c].in_free_space(points[id].xy())) {
              comp_ids[c].push_back(id);
              placed = true;
            }
          }
          if (!placed) throw InvalidInput("point escaped the union of faces");
        }
        for (std::size_t c = 0; c < components.size(); ++c)
          run_domain(components[c], comp_ids[c], depth + 1);
      }
    }
  }
};

void validate_points(const std::vector<WeightedPoint>& points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].id != static_cast<int>(i))
      throw InvalidInput("point ids must be contiguous from 0");
    if (points[i].dim() != 2) throw InvalidInput("geodesic spanners need planar points");
    if (points[i].weight < 0.0) throw InvalidInput("negative weight");
  }
}

}  // namespace

SpannerGraph build_vftswp_simple_polygon(const SimplePolygon& poly,
                                         const std::vector<WeightedPoint>& points, int k,
                                         double eps, bool refine, BuildTrace* trace) {
  validate_points(points);
  if (eps <= 0.0) throw InvalidInput("eps must be positive");
  SpannerGraph g(static_cast<int>(points.size()));
  if (points.size() <= 1) return g;
  for (const auto& p : points)
    if (!poly.contains(p.xy())) throw InvalidInput("point outside polygon");

  GeodesicEngine root{PolygonalDomain(poly)};
  PolygonBuilder builder{points, root, k,    eps,
                         refine, g,    trace, recursion_cap(points.size())};
  std::vector<int> ids(points.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
  builder.run_simple(poly, ids, 0);
  return g;
}

SpannerGraph build_vftswp_domain(const PolygonalDomain& dom,
                                 const std::vector<WeightedPoint>& points, int k, double eps,
                                 bool refine, BuildTrace* trace) {
  validate_points(points);
  if (eps <= 0.0) throw InvalidInput("eps must be positive");
  SpannerGraph g(static_cast<int>(points.size()));
  if (points.size() <= 1) return g;
  for (const auto& p : points)
    if (!dom.in_free_space(p.xy())) throw InvalidInput("point outside free space");

  GeodesicEngine root{dom};
  PolygonBuilder builder{points, root, k,    eps,
                         refine, g,    trace, recursion_cap(points.size())};
  std::vector<int> ids(points.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
  builder.run_domain(dom, ids, 0);
  return g;
}

}  // namespace vfts
