#include <doctest.h>

#include <cmath>
#include <random>

#include "vfts/generate.hpp"
#include "vfts/polygon_spanner.hpp"
#include "vfts/verify.hpp"

using namespace vfts;

namespace {

WeightedPoint wp(double x, double y, double w, int id) { return {Vec2{x, y}, w, id}; }

std::vector<WeightedPoint> interior_weighted(const PolygonalDomain& dom, int n,
                                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<WeightedPoint> out;
  while (static_cast<int>(out.size()) < n) {
    Vec2 p{u(rng), u(rng)};
    if (dom.in_free_space(p) && !dom.on_boundary(p, 1e-6))
      out.push_back(wp(p.x, p.y, u(rng), static_cast<int>(out.size())));
  }
  return out;
}

}  // namespace

TEST_CASE("projection set sizes") {
  PolygonalDomain dom{shape_polygon("convex-8")};
  GeodesicEngine eng{dom};
  SplittingSegment seg{Vec2{0.2, 0.5}, Vec2{0.8, 0.5}};
  WeightedPoint p = wp(0.5, 0.8, 1.5, 0);

  auto unref = project_onto_segment(p, seg, eng, 0.5, false);
  REQUIRE(unref.points.size() == 1);
  CHECK(unref.points[0].weight == doctest::Approx(1.5 + 0.3));
  CHECK(unref.points[0].coords[1] == doctest::Approx(0.5));

  auto ref = project_onto_segment(p, seg, eng, 0.5, true);
  CHECK(ref.points.size() >= 1);
  CHECK(ref.points.size() <= 4);  // ceil(1 / 0.5^2)
  for (const auto& q : ref.points) {
    CHECK(q.weight >= 1.5 + 0.3 - 1e-9);  // never lighter than the optimum
    CHECK(q.coords[1] == doctest::Approx(0.5));
  }

  // a point already on the segment projects to a singleton of its own weight
  auto on = project_onto_segment(wp(0.5, 0.5, 2.0, 1), seg, eng, 0.5, true);
  REQUIRE(on.points.size() == 1);
  CHECK(on.points[0].weight == doctest::Approx(2.0));

  // eps = 1 collapses the refined set to the single nearest point
  auto coarse = project_onto_segment(p, seg, eng, 1.0, true);
  CHECK(coarse.points.size() == 1);
}

TEST_CASE("two points yield the single geodesic edge") {
  SimplePolygon poly = shape_polygon("lshape");
  PolygonalDomain dom{poly};
  GeodesicEngine eng{dom};
  std::vector<WeightedPoint> pts{wp(0.1, 0.9, 1.0, 0), wp(0.9, 0.1, 2.0, 1)};
  auto g = build_vftswp_simple_polygon(poly, pts, 1, 0.5, false);
  REQUIRE(g.edge_count() == 1);
  REQUIRE(g.has_edge(0, 1));
  double geo = eng.distance(pts[0].xy(), pts[1].xy());
  CHECK(g.edges()[0].base_length == doctest::Approx(geo).epsilon(1e-9));
}

TEST_CASE("mutually visible pair in a convex polygon gets the straight edge") {
  SimplePolygon poly = shape_polygon("convex-8");
  std::vector<WeightedPoint> pts{wp(0.4, 0.5, 0.5, 0), wp(0.6, 0.5, 0.5, 1)};
  auto g = build_vftswp_simple_polygon(poly, pts, 0, 0.5, false);
  REQUIRE(g.has_edge(0, 1));
  for (const auto& e : g.edges())
    if (e.u == 0 && e.v == 1) CHECK(e.base_length == doctest::Approx(0.2).epsilon(1e-9));
}

TEST_CASE("simple-polygon spanner: stretch, structure, recursion depth") {
  SimplePolygon poly = shape_polygon("convex-20");
  PolygonalDomain dom{poly};
  GeodesicEngine eng{dom};
  auto pts = interior_weighted(dom, 12, 51);
  double eps = 0.5;

  for (bool refine : {false, true}) {
    BuildTrace trace;
    auto g = build_vftswp_simple_polygon(poly, pts, 1, eps, refine, &trace);
    double t = refine ? 4.0 + 14.0 * eps : 12.0 + 15.0 * eps;
    auto rep = fault_stretch_check(g, pts, 1, t, geodesic_metric(eng), true);
    CHECK(rep.pass);
    CHECK(rep.min_slack >= -1e-9);
    CHECK(check_graph(g, pts, geodesic_metric(eng)).empty());
    CHECK(check_balance(trace).empty());
    CHECK(check_projection_optimality(dom, pts, trace).empty());
    int depth_bound = static_cast<int>(std::ceil(std::log(12.0) / std::log(1.5))) + 1;
    CHECK(trace.max_depth <= depth_bound);
  }
}

TEST_CASE("hole-free domain builder matches the simple-polygon builder") {
  SimplePolygon poly = shape_polygon("lshape");
  PolygonalDomain dom{poly};
  auto pts = interior_weighted(dom, 10, 77);
  auto gs = build_vftswp_simple_polygon(poly, pts, 1, 0.5, true);
  auto gd = build_vftswp_domain(dom, pts, 1, 0.5, true);
  auto es = gs.sorted_edges();
  auto ed = gd.sorted_edges();
  REQUIRE(es.size() == ed.size());
  for (std::size_t i = 0; i < es.size(); ++i) {
    CHECK(es[i].u == ed[i].u);
    CHECK(es[i].v == ed[i].v);
    CHECK(es[i].base_length == doctest::Approx(ed[i].base_length).epsilon(1e-12));
  }
}

TEST_CASE("domain with a hole: refined stretch bound holds exhaustively") {
  auto dom = shape_domain("square-hole");
  GeodesicEngine eng{dom};
  auto pts = interior_weighted(dom, 12, 90);
  double eps = 0.5;
  BuildTrace trace;
  auto g = build_vftswp_domain(dom, pts, 1, eps, true, &trace);
  auto rep = fault_stretch_check(g, pts, 1, 4.0 + 14.0 * eps, geodesic_metric(eng), true);
  CHECK(rep.pass);
  CHECK(rep.min_slack >= -1e-9);
  CHECK(check_graph(g, pts, geodesic_metric(eng)).empty());
  CHECK(check_balance(trace).empty());
  CHECK(check_projection_optimality(dom, pts, trace).empty());
}

TEST_CASE("input validation") {
  SimplePolygon poly = shape_polygon("convex-8");
  std::vector<WeightedPoint> outside{wp(5.0, 5.0, 1.0, 0), wp(0.5, 0.5, 1.0, 1)};
  CHECK_THROWS_AS(build_vftswp_simple_polygon(poly, outside, 1, 0.5, false), InvalidInput);
  std::vector<WeightedPoint> badids{wp(0.4, 0.5, 1.0, 0), wp(0.6, 0.5, 1.0, 5)};
  CHECK_THROWS_AS(build_vftswp_simple_polygon(poly, badids, 1, 0.5, false), InvalidInput);
  CHECK(build_vftswp_simple_polygon(poly, {}, 1, 0.5, false).edge_count() == 0);
  CHECK(build_vftswp_simple_polygon(poly, {wp(0.5, 0.5, 1, 0)}, 1, 0.5, true).edge_count() ==
        0);
}
