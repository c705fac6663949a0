#include "vfts/cluster_spanner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace vfts {

Clustering cluster(const std::vector<WeightedPoint>& points, int k, double eps) {
  if (points.empty()) throw InvalidInput("empty point set");
  if (eps <= 0.0) throw InvalidInput("eps must be positive");
  if (k < 0) throw InvalidInput("k must be non-negative");

  const int n = static_cast<int>(points.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    if (points[i].weight != points[j].weight) return points[i].weight < points[j].weight;
    return points[i].id < points[j].id;
  });

  Clustering c;
  auto open_cluster = [&](int idx) {
    c.centers.push_back(points[idx].id);
    c.members.push_back({points[idx].id});
    c.assignment[points[idx].id] = static_cast<int>(c.centers.size()) - 1;
  };

  const int seeds = std::min(n, k + 1);
  for (int i = 0; i < seeds; ++i) open_cluster(order[i]);

  std::vector<int> center_pos(c.centers.size());  // position in `points` per cluster
  for (std::size_t i = 0; i < c.centers.size(); ++i) center_pos[i] = order[i];

  for (int i = seeds; i < n; ++i) {
    int idx = order[i];
    int best_cluster = -1;
    double best_dist = 0.0;
    for (std::size_t ci = 0; ci < c.centers.size(); ++ci) {
      double d = euclid(points[idx].coords, points[center_pos[ci]].coords);
      if (best_cluster < 0 || d < best_dist ||
          (d == best_dist && c.centers[ci] < c.centers[best_cluster])) {
        best_cluster = static_cast<int>(ci);
        best_dist = d;
      }
    }
    if (best_dist <= eps * points[idx].weight) {
      c.members[best_cluster].push_back(points[idx].id);
      c.assignment[points[idx].id] = best_cluster;
    } else {
      open_cluster(idx);
      center_pos.push_back(idx);
    }
  }
  return c;
}

SpannerGraph build_vftswp_rd(const std::vector<WeightedPoint>& points, int k, double eps,
                             double t_base) {
  const int n = static_cast<int>(points.size());
  for (int i = 0; i < n; ++i) {
    if (points[i].id != i) throw InvalidInput("point ids must be contiguous from 0");
    if (points[i].weight < 0.0) throw InvalidInput("negative weight");
  }
  SpannerGraph g(n);
  if (n <= 1) return g;
  if (t_base <= 0.0) t_base = 2.0 + eps;

  Clustering cl = cluster(points, k, eps);
  const int z = static_cast<int>(cl.centers.size());

  std::vector<std::vector<double>> center_coords(z);
  for (int i = 0; i < z; ++i) center_coords[i] = points[cl.centers[i]].coords;

  // Coincident centers can occur (coincident inputs, projected points); the
  // base construction wants distinct locations, so feed it a deterministically
  // perturbed copy and recompute every edge length from the true coordinates.
  // Duplicates slide along the direction of the first distinct center pair,
  // which keeps collinear inputs collinear.
  std::vector<std::vector<double>> base_coords = center_coords;
  {
    const std::size_t d = base_coords[0].size();
    auto has_dup = [&]() {
      std::set<std::vector<double>> seen;
      for (const auto& c : base_coords)
        if (!seen.insert(c).second) return true;
      return false;
    };
    if (has_dup()) {
      std::vector<double> dir(d, 0.0);
      bool found = false;
      for (int i = 1; i < z && !found; ++i) {
        double len = euclid(base_coords[0], base_coords[i]);
        if (len > 0.0) {
          for (std::size_t j = 0; j < d; ++j)
            dir[j] = (base_coords[i][j] - base_coords[0][j]) / len;
          found = true;
        }
      }
      if (!found) dir[0] = 1.0;
      double scale = 1.0;
      for (const auto& c : base_coords)
        for (double x : c) scale = std::max(scale, std::abs(x));
      double delta = 1e-10 * scale;
      for (int round = 0; round < 60 && has_dup(); ++round, delta *= 2.0) {
        std::map<std::vector<double>, int> seen;
        for (auto& c : base_coords) {
          int copies = seen[c]++;
          if (copies > 0)
            for (std::size_t j = 0; j < d; ++j) c[j] += copies * delta * dir[j];
        }
      }
      if (has_dup()) throw InvalidInput("could not separate coincident centers");
    }
  }
  SpannerGraph base = build_base_vfts(base_coords, BaseSpannerParams(k, t_base));

  for (const auto& e : base.edges()) {
    int cu = cl.centers[e.u], cv = cl.centers[e.v];
    g.add_edge(cu, cv, euclid(points[cu].coords, points[cv].coords));
  }

  for (int ci = 0; ci < z; ++ci) {
    const auto& mem = cl.members[ci];
    const int take = std::min<int>(k + 1, static_cast<int>(mem.size()));
    std::vector<int> least(mem.begin(), mem.begin() + take);
    std::vector<int> base_nbrs = k_nearest_neighbors_in_graph(base, center_coords, ci, k);

    for (std::size_t mi = 1; mi < mem.size(); ++mi) {  // skip the center itself
      int p = mem[mi];
      for (int v : least) {
        if (v == p) continue;
        g.add_edge(p, v, euclid(points[p].coords, points[v].coords));
      }
      for (int b : base_nbrs) {
        int v = cl.centers[b];
        if (v == p) continue;
        g.add_edge(p, v, euclid(points[p].coords, points[v].coords));
      }
    }
  }
  return g;
}

}  // namespace vfts
