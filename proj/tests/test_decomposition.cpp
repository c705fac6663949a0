#include <doctest.h>

#include <random>

#include "vfts/decomposition.hpp"
#include "vfts/generate.hpp"
#include "vfts/separator.hpp"
#include "vfts/verify.hpp"

using namespace vfts;

namespace {

std::vector<Vec2> interior_points(const PolygonalDomain& dom, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Vec2> out;
  while (static_cast<int>(out.size()) < count) {
    Vec2 p{u(rng), u(rng)};
    if (dom.in_free_space(p) && !dom.on_boundary(p, 1e-6)) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("a hole-free domain decomposes into itself") {
  PolygonalDomain dom{shape_polygon("lshape")};
  auto dec = decompose_domain(dom);
  CHECK(dec.faces.size() == 1);
  CHECK(dec.segments.empty());
  CHECK(check_decomposition(dec, 0).empty());
  CHECK(dec.locate_face(Vec2{0.25, 0.25}) == 0);
}

TEST_CASE("square with a centered hole splits into a ring of faces") {
  auto dom = shape_domain("square-hole");
  auto dec = decompose_domain(dom);
  CHECK(check_decomposition(dec, 1).empty());
  CHECK(dec.faces.size() <= 16);
  CHECK(dec.faces.size() >= 4);  // the hole forces at least a ring
  for (std::size_t f = 0; f < dec.faces.size(); ++f)
    CHECK(dec.segments_of_face(static_cast<int>(f)).size() <= 3);

  // the dual graph is connected: every face reaches face 0
  int m = static_cast<int>(dec.faces.size());
  std::vector<std::vector<int>> adj(m);
  for (auto [a, b] : dec.segment_faces) {
    REQUIRE(a >= 0);
    REQUIRE(b >= 0);
    REQUIRE(a < m);
    REQUIRE(b < m);
    CHECK(a != b);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(m, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
  }
  for (int f = 0; f < m; ++f) CHECK(seen[f]);

  // faces tile the free space: random interior points land in exactly one face
  for (const auto& p : interior_points(dom, 50, 3)) {
    int face = dec.locate_face(p);
    REQUIRE(face >= 0);
    CHECK(dec.faces[face].contains(p));
  }
}

TEST_CASE("two-hole domain satisfies all decomposition bounds") {
  auto dom = shape_domain("square-2holes");
  auto dec = decompose_domain(dom);
  CHECK(check_decomposition(dec, 2).empty());
  CHECK(dec.faces.size() <= 24);
}

TEST_CASE("splitting a square with clustered points stays balanced") {
  SimplePolygon square{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
  std::vector<Vec2> pts{{0.5, 0.49}, {0.5, 0.5}, {0.5, 0.51}};
  auto split = splitting_segment_simple(square, pts);
  CHECK(split.left_points.size() + split.right_points.size() == 3);
  CHECK(split.left_points.size() <= 2);
  CHECK(split.right_points.size() <= 2);
  CHECK(split.left.size() >= 3);
  CHECK(split.right.size() >= 3);
}

TEST_CASE("splitting with one point works") {
  SimplePolygon square{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
  auto split = splitting_segment_simple(square, {{0.3, 0.7}});
  CHECK(split.left_points.size() + split.right_points.size() == 1);
}

TEST_CASE("splitting a random polygon respects the 2/3 bound") {
  SimplePolygon poly = shape_polygon("random-20", 17);
  PolygonalDomain dom{poly};
  auto pts = interior_points(dom, 30, 18);
  auto split = splitting_segment_simple(poly, pts);
  CHECK(split.left_points.size() + split.right_points.size() == 30);
  CHECK(split.left_points.size() <= 20);   // ceil(2 * 30 / 3)
  CHECK(split.right_points.size() <= 20);
  // every assigned point must be in (or on) its side
  for (int i : split.left_points) CHECK(split.left.contains(pts[i]));
  for (int i : split.right_points) CHECK(split.right.contains(pts[i]));
}

TEST_CASE("separator of a path cuts off at most two thirds") {
  WeightedGraph g;
  g.node_weights.assign(9, 1.0);
  for (int i = 0; i + 1 < 9; ++i) g.edges.emplace_back(i, i + 1);
  auto sep = planar_separator(g);
  CHECK(sep.separator == std::vector<int>{2});
  CHECK(sep.part_a == std::vector<int>{3, 4, 5, 6, 7, 8});
  CHECK(sep.part_b == std::vector<int>{0, 1});
}

TEST_CASE("separator of a 4-cycle") {
  WeightedGraph g;
  g.node_weights.assign(4, 1.0);
  g.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  auto sep = planar_separator(g);
  CHECK(sep.separator == std::vector<int>{0, 1});
  CHECK(sep.part_a == std::vector<int>{2, 3});
  CHECK(sep.part_b.empty());
}

TEST_CASE("separator edge cases and invariants") {
  WeightedGraph tiny;
  tiny.node_weights = {1.0};
  CHECK_THROWS_AS(planar_separator(tiny), InvalidInput);

  WeightedGraph two;
  two.node_weights = {1.0, 1.0};
  two.edges = {{0, 1}};
  auto s2 = planar_separator(two);
  CHECK(s2.separator.size() + s2.part_a.size() + s2.part_b.size() == 2);

  // grid graph, 5x5, weights 1..25 (forces the large-m BFS branch via m > 12)
  WeightedGraph grid;
  int side = 5;
  for (int i = 0; i < side * side; ++i) grid.node_weights.push_back(1.0 + i % 3);
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c) {
      int v = r * side + c;
      if (c + 1 < side) grid.edges.emplace_back(v, v + 1);
      if (r + 1 < side) grid.edges.emplace_back(v, v + side);
    }
  auto sep = planar_separator(grid);
  int m = grid.size();
  CHECK(static_cast<int>(sep.separator.size()) <= static_cast<int>(4.0 * std::sqrt(m)));
  double total = 0.0, wa = 0.0, wb = 0.0;
  for (double w : grid.node_weights) total += w;
  for (int v : sep.part_a) wa += grid.node_weights[v];
  for (int v : sep.part_b) wb += grid.node_weights[v];
  CHECK(wa <= 2.0 / 3.0 * total + 1e-9);
  CHECK(wb <= 2.0 / 3.0 * total + 1e-9);
  // no edge joins the two parts
  std::vector<int> where(m, 0);
  for (int v : sep.part_a) where[v] = 1;
  for (int v : sep.part_b) where[v] = 2;
  for (auto [u, v] : grid.edges) CHECK((where[u] == 0 || where[v] == 0 || where[u] == where[v]));
  CHECK(sep.separator.size() + sep.part_a.size() + sep.part_b.size() ==
        static_cast<std::size_t>(m));
}
