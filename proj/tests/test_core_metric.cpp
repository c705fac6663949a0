#include <doctest.h>

#include <random>

#include "vfts/core_metric.hpp"

using namespace vfts;

namespace {

WeightedPoint wp(double x, double y, double w, int id) { return {Vec2{x, y}, w, id}; }

}  // namespace

TEST_CASE("weighted_distance basics") {
  WeightedPoint p = wp(0, 0, 1, 0);
  WeightedPoint q = wp(3, 4, 2, 1);
  CHECK(weighted_distance(p, q, 5.0) == doctest::Approx(8.0));
  CHECK(weighted_distance(p, p, 5.0) == 0.0);  // same id

  WeightedPoint a = wp(0, 0, 0, 2), b = wp(1, 0, 0, 3);
  CHECK(weighted_distance(a, b, 1.0) == 1.0);  // zero weights reduce to the metric
  CHECK(weighted_distance(p, q, 5.0) == weighted_distance(q, p, 5.0));

  CHECK_THROWS_AS(weighted_distance(p, q, -1.0), InvalidInput);
  CHECK_THROWS_AS(WeightedPoint(Vec2{0, 0}, -0.5, 9), InvalidInput);
}

TEST_CASE("graph_distance through-vertex weight accrues twice") {
  std::vector<WeightedPoint> pts{wp(0, 0, 0, 0), wp(1, 0, 2, 1), wp(2, 0, 0, 2)};
  SpannerGraph g(3);
  g.add_edge(0, 1, 1.0);
  g.add_edge(1, 2, 1.0);
  CHECK(graph_distance(g, pts, 0, 2) == doctest::Approx(6.0));
  CHECK(graph_distance(g, pts, 0, 0) == 0.0);
  CHECK(graph_distance(g, pts, 0, 2, {1}) == kUnreachable);
  CHECK_THROWS_AS(graph_distance(g, pts, 1, 2, {1}), InvalidInput);
  CHECK_THROWS_AS(graph_distance(g, pts, 0, 7), InvalidInput);
}

TEST_CASE("graph edge bookkeeping") {
  SpannerGraph g(4);
  g.add_edge(2, 1, 0.5);
  g.add_edge(1, 2, 9.0);  // duplicate keeps the first length
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 1));
  CHECK(g.edges()[0].u == 1);
  CHECK(g.edges()[0].base_length == 0.5);
  CHECK_THROWS_AS(g.add_edge(3, 3, 1.0), InvalidInput);
  CHECK_THROWS_AS(g.add_edge(0, 4, 1.0), InvalidInput);
  CHECK_THROWS_AS(g.add_edge(0, 1, -1.0), InvalidInput);

  g.add_edge(0, 3, 1.0);
  g.add_edge(0, 1, 1.0);
  auto es = g.sorted_edges();
  CHECK(es[0].u == 0);
  CHECK(es[0].v == 1);
  CHECK(es[1].v == 3);
  CHECK(es[2].u == 1);
  CHECK(g.max_degree() == 2);
}

TEST_CASE("deletion monotonicity and edge upper bound") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<WeightedPoint> pts;
  for (int i = 0; i < 10; ++i) pts.push_back(wp(u(rng), u(rng), u(rng), i));
  SpannerGraph g(10);
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j)
      if (u(rng) < 0.5) g.add_edge(i, j, euclid(pts[i].coords, pts[j].coords));

  for (int trial = 0; trial < 50; ++trial) {
    int a = static_cast<int>(u(rng) * 10) % 10;
    int b = static_cast<int>(u(rng) * 10) % 10;
    int r = static_cast<int>(u(rng) * 10) % 10;
    if (a == b || r == a || r == b) continue;
    CHECK(graph_distance(g, pts, a, b) <= graph_distance(g, pts, a, b, {r}));
  }
  for (const auto& e : g.edges()) {
    double direct = pts[e.u].weight + e.base_length + pts[e.v].weight;
    CHECK(graph_distance(g, pts, e.u, e.v) <= direct + 1e-12);
  }
}
