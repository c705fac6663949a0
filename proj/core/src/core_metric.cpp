#include "vfts/core_metric.hpp"

#include <algorithm>
#include <queue>

namespace vfts {

bool on_segment(const Vec2& a, const Vec2& b, const Vec2& p, double tol) {
  if (std::abs(orient(a, b, p)) > tol * (1.0 + dist(a, b))) return false;
  double t = dot(p - a, b - a);
  double len2 = dot(b - a, b - a);
  return t >= -tol && t <= len2 + tol;
}

bool segments_cross_properly(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  double o1 = orient(a, b, c);
  double o2 = orient(a, b, d);
  double o3 = orient(c, d, a);
  double o4 = orient(c, d, b);
  return ((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) &&
         ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0));
}

bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  if (segments_cross_properly(a, b, c, d)) return true;
  return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) ||
         on_segment(c, d, b);
}

Vec2 closest_point_on_segment(const Vec2& a, const Vec2& b, const Vec2& p) {
  Vec2 ab = b - a;
  double len2 = dot(ab, ab);
  if (len2 == 0.0) return a;
  double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return a + ab * t;
}

double euclid(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw InvalidInput("dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

void SpannerGraph::add_edge(int u, int v, double base_length) {
  if (u == v) throw InvalidInput("self-loop");
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InvalidInput("edge endpoint out of range");
  if (base_length < 0.0) throw InvalidInput("negative edge length");
  if (u > v) std::swap(u, v);
  if (!present_.insert({u, v}).second) return;
  edges_.push_back({u, v, base_length});
  adj_dirty_ = true;
}

bool SpannerGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return present_.count({u, v}) > 0;
}

void SpannerGraph::rebuild_adjacency() const {
  adj_.assign(n_, {});
  for (const auto& e : edges_) {
    adj_[e.u].push_back({e.v, e.base_length});
    adj_[e.v].push_back({e.u, e.base_length});
  }
  for (auto& lst : adj_) std::sort(lst.begin(), lst.end());
  adj_dirty_ = false;
}

const std::vector<std::pair<int, double>>& SpannerGraph::neighbors(int v) const {
  if (adj_dirty_) rebuild_adjacency();
  return adj_.at(v);
}

int SpannerGraph::max_degree() const {
  if (adj_dirty_) rebuild_adjacency();
  int d = 0;
  for (const auto& lst : adj_) d = std::max(d, static_cast<int>(lst.size()));
  return d;
}

std::vector<SpannerGraph::Edge> SpannerGraph::sorted_edges() const {
  auto es = edges_;
  std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  return es;
}

double weighted_distance(const WeightedPoint& p, const WeightedPoint& q, double pi_len) {
  if (pi_len < 0.0) throw InvalidInput("negative metric distance");
  if (p.weight < 0.0 || q.weight < 0.0) throw InvalidInput("negative weight");
  if (p.id == q.id) return 0.0;
  return p.weight + pi_len + q.weight;
}

std::vector<double> graph_distances_from(const SpannerGraph& g,
                                         const std::vector<WeightedPoint>& points,
                                         int src, const std::set<int>& removed) {
  const int n = g.vertex_count();
  if (src < 0 || src >= n) throw InvalidInput("source out of range");
  if (removed.count(src)) throw InvalidInput("source is removed");
  std::vector<double> dist(n, kUnreachable);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[src] = 0.0;
  heap.push({0.0, src});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    for (auto [v, len] : g.neighbors(u)) {
      if (removed.count(v)) continue;
      double nd = d + points[u].weight + len + points[v].weight;
      if (nd < dist[v]) {
        dist[v] = nd;
        heap.push({nd, v});
      }
    }
  }
  for (int r : removed)
    if (r >= 0 && r < n) dist[r] = kUnreachable;
  return dist;
}

double graph_distance(const SpannerGraph& g, const std::vector<WeightedPoint>& points,
                      int src, int dst, const std::set<int>& removed) {
  const int n = g.vertex_count();
  if (dst < 0 || dst >= n) throw InvalidInput("target out of range");
  if (removed.count(dst)) throw InvalidInput("target is removed");
  if (src == dst) return 0.0;
  return graph_distances_from(g, points, src, removed)[dst];
}

}  // namespace vfts
