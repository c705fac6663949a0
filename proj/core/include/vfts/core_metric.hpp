#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <vector>

#include "vfts/geometry.hpp"

namespace vfts {

/// A point with d coordinates, a non-negative additive weight, and a stable id.
struct WeightedPoint {
  std::vector<double> coords;
  double weight = 0.0;
  int id = 0;

  WeightedPoint() = default;
  WeightedPoint(std::vector<double> c, double w, int id_)
      : coords(std::move(c)), weight(w), id(id_) {
    if (w < 0.0) throw InvalidInput("point weight must be non-negative");
  }
  WeightedPoint(Vec2 p, double w, int id_)
      : WeightedPoint(std::vector<double>{p.x, p.y}, w, id_) {}

  Vec2 xy() const { return {coords[0], coords[1]}; }
  std::size_t dim() const { return coords.size(); }
};

/// Undirected edge list over point indices; each edge carries the metric
/// length (Euclidean or geodesic) between its endpoints.
class SpannerGraph {
 public:
  struct Edge {
    int u;  // u < v
    int v;
    double base_length;
  };

  SpannerGraph() = default;
  explicit SpannerGraph(int n) : n_(n) {}

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Inserts {u, v}; duplicates are ignored, keeping the first length seen.
  void add_edge(int u, int v, double base_length);
  bool has_edge(int u, int v) const;

  /// Adjacency as (neighbor, base_length) lists, index order.
  const std::vector<std::pair<int, double>>& neighbors(int v) const;

  int max_degree() const;

  /// Edges sorted lexicographically by (u, v); canonical order for files.
  std::vector<Edge> sorted_edges() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::set<std::pair<int, int>> present_;
  mutable std::vector<std::vector<std::pair<int, double>>> adj_;
  mutable bool adj_dirty_ = true;
  void rebuild_adjacency() const;
};

/// d_w(p, q) = w(p) + pi_len + w(q), zero for identical ids.
double weighted_distance(const WeightedPoint& p, const WeightedPoint& q, double pi_len);

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

/// Shortest path cost from src to dst where edge {u,v} costs
/// w(u) + base_length + w(v); vertices in `removed` are deleted.
/// Returns kUnreachable when no path survives.
double graph_distance(const SpannerGraph& g, const std::vector<WeightedPoint>& points,
                      int src, int dst, const std::set<int>& removed = {});

/// Single-source variant; dist[v] = kUnreachable for unreachable or removed v.
std::vector<double> graph_distances_from(const SpannerGraph& g,
                                         const std::vector<WeightedPoint>& points,
                                         int src, const std::set<int>& removed = {});

}  // namespace vfts
