#include "vfts/base_vfts.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace vfts {

namespace {

constexpr double kCollinearTol = 1e-12;

bool all_collinear(const std::vector<std::vector<double>>& pts) {
  if (pts.size() <= 2) return true;
  // anchored at pts[0] with the first distinct point as direction
  std::size_t ref = 1;
  while (ref < pts.size() && euclid(pts[0], pts[ref]) == 0.0) ++ref;
  if (ref >= pts.size()) return true;
  Vec2 a{pts[0][0], pts[0][1]};
  Vec2 b{pts[ref][0], pts[ref][1]};
  for (const auto& p : pts) {
    if (std::abs(orient(a, b, {p[0], p[1]})) > kCollinearTol * (1.0 + dist(a, b)))
      return false;
  }
  return true;
}

// Collinear special case: k+1 nearest points on each side along the line.
void build_collinear(const std::vector<std::vector<double>>& pts, int k, SpannerGraph& g) {
  const int n = static_cast<int>(pts.size());
  Vec2 a{pts[0][0], pts[0][1]};
  Vec2 dir{0.0, 0.0};
  for (int i = 1; i < n; ++i) {
    Vec2 b{pts[i][0], pts[i][1]};
    if (dist(a, b) > 0.0) {
      dir = b - a;
      break;
    }
  }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    double ti = dot(Vec2{pts[i][0], pts[i][1]} - a, dir);
    double tj = dot(Vec2{pts[j][0], pts[j][1]} - a, dir);
    if (ti != tj) return ti < tj;
    return i < j;
  });
  for (int i = 0; i < n; ++i) {
    for (int step = 1; step <= k + 1 && i + step < n; ++step) {
      g.add_edge(order[i], order[i + step], euclid(pts[order[i]], pts[order[i + step]]));
    }
  }
}

void build_cones_2d(const std::vector<std::vector<double>>& pts, int k, int cones,
                    SpannerGraph& g) {
  const int n = static_cast<int>(pts.size());
  const double sector = 2.0 * std::numbers::pi / cones;
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<std::pair<double, int>>> by_cone(cones);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      double dx = pts[j][0] - pts[i][0];
      double dy = pts[j][1] - pts[i][1];
      double ang = std::atan2(dy, dx);
      if (ang < 0.0) ang += 2.0 * std::numbers::pi;
      int c = std::min(static_cast<int>(ang / sector), cones - 1);
      by_cone[c].push_back({std::hypot(dx, dy), j});
    }
    for (auto& bucket : by_cone) {
      std::sort(bucket.begin(), bucket.end());
      const int take = std::min<int>(k + 1, static_cast<int>(bucket.size()));
      for (int t = 0; t < take; ++t) g.add_edge(i, bucket[t].second, bucket[t].first);
    }
  }
}

// --- well-separated pair decomposition for d >= 3 ---

struct SplitNode {
  std::vector<int> pts;
  std::vector<double> lo, hi;  // bounding box
  int left = -1, right = -1;
};

struct Wspd {
  const std::vector<std::vector<double>>& p;
  std::vector<SplitNode> nodes;
  std::vector<std::pair<int, int>> pairs;
  double separation;

  explicit Wspd(const std::vector<std::vector<double>>& pts, double s)
      : p(pts), separation(s) {}

  int build(std::vector<int> ids) {
    const std::size_t d = p[0].size();
    SplitNode node;
    node.pts = ids;
    node.lo.assign(d, std::numeric_limits<double>::max());
    node.hi.assign(d, -std::numeric_limits<double>::max());
    for (int i : ids) {
      for (std::size_t j = 0; j < d; ++j) {
        node.lo[j] = std::min(node.lo[j], p[i][j]);
        node.hi[j] = std::max(node.hi[j], p[i][j]);
      }
    }
    int self = static_cast<int>(nodes.size());
    nodes.push_back(node);
    if (ids.size() > 1) {
      std::size_t axis = 0;
      for (std::size_t j = 1; j < d; ++j)
        if (node.hi[j] - node.lo[j] > node.hi[axis] - node.lo[axis]) axis = j;
      double mid = 0.5 * (node.lo[axis] + node.hi[axis]);
      std::vector<int> l, r;
      for (int i : ids) (p[i][axis] <= mid ? l : r).push_back(i);
      if (l.empty() || r.empty()) {
        // all coordinates equal on the split axis span; split by id order
        std::sort(ids.begin(), ids.end());
        l.assign(ids.begin(), ids.begin() + ids.size() / 2);
        r.assign(ids.begin() + ids.size() / 2, ids.end());
      }
      int li = build(std::move(l));
      int ri = build(std::move(r));
      nodes[self].left = li;
      nodes[self].right = ri;
    }
    return self;
  }

  double radius(const SplitNode& n) const {
    double s = 0.0;
    for (std::size_t j = 0; j < n.lo.size(); ++j)
      s += (n.hi[j] - n.lo[j]) * (n.hi[j] - n.lo[j]);
    return 0.5 * std::sqrt(s);
  }

  bool well_separated(const SplitNode& a, const SplitNode& b) const {
    double ra = radius(a), rb = radius(b), r = std::max(ra, rb);
    double c2 = 0.0;
    for (std::size_t j = 0; j < a.lo.size(); ++j) {
      double ca = 0.5 * (a.lo[j] + a.hi[j]);
      double cb = 0.5 * (b.lo[j] + b.hi[j]);
      c2 += (ca - cb) * (ca - cb);
    }
    return std::sqrt(c2) - ra - rb >= separation * r;
  }

  void find_pairs(int u, int v) {
    if (u == v) {
      if (nodes[u].left < 0) return;
      find_pairs(nodes[u].left, nodes[u].left);
      find_pairs(nodes[u].right, nodes[u].right);
      find_pairs(nodes[u].left, nodes[u].right);
      return;
    }
    if (well_separated(nodes[u], nodes[v])) {
      pairs.push_back({u, v});
      return;
    }
    if (radius(nodes[u]) >= radius(nodes[v])) {
      find_pairs(nodes[u].left, v);
      find_pairs(nodes[u].right, v);
    } else {
      find_pairs(u, nodes[v].left);
      find_pairs(u, nodes[v].right);
    }
  }
};

void build_wspd(const std::vector<std::vector<double>>& pts, int k, double t,
                SpannerGraph& g) {
  double s = 4.0 * (t + 1.0) / (t - 1.0);
  Wspd w(pts, s);
  std::vector<int> ids(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) ids[i] = static_cast<int>(i);
  int root = w.build(std::move(ids));
  w.find_pairs(root, root);
  for (auto [u, v] : w.pairs) {
    auto a = w.nodes[u].pts;
    auto b = w.nodes[v].pts;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const int na = std::min<int>(k + 1, static_cast<int>(a.size()));
    const int nb = std::min<int>(k + 1, static_cast<int>(b.size()));
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < nb; ++j) g.add_edge(a[i], b[j], euclid(pts[a[i]], pts[b[j]]));
  }
}

}  // namespace

int BaseSpannerParams::cone_count() const {
  for (int c = 4; c <= 1 << 20; ++c) {
    double sn = std::sin(std::numbers::pi / c);
    if (2.0 * sn >= 1.0) continue;
    if (1.0 / (1.0 - 2.0 * sn) <= t_base) return c;
  }
  throw InvalidInput("no cone count satisfies the requested stretch");
}

SpannerGraph build_base_vfts(const std::vector<std::vector<double>>& points,
                             const BaseSpannerParams& params) {
  const int n = static_cast<int>(points.size());
  SpannerGraph g(n);
  if (n <= 1) return g;
  const std::size_t d = points[0].size();
  for (const auto& p : points)
    if (p.size() != d) throw InvalidInput("mixed point dimensions");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (euclid(points[i], points[j]) == 0.0) throw InvalidInput("duplicate points");

  if (n == 2) {
    g.add_edge(0, 1, euclid(points[0], points[1]));
    return g;
  }
  if (d == 2) {
    if (all_collinear(points))
      build_collinear(points, params.k, g);
    else
      build_cones_2d(points, params.k, params.cone_count(), g);
  } else {
    build_wspd(points, params.k, params.t_base, g);
  }
  return g;
}

std::vector<int> k_nearest_neighbors_in_graph(const SpannerGraph& g,
                                              const std::vector<std::vector<double>>& points,
                                              int v, int k) {
  if (v < 0 || v >= g.vertex_count()) throw InvalidInput("vertex out of range");
  std::vector<std::pair<double, int>> cand;
  for (auto [u, len] : g.neighbors(v)) {
    (void)len;
    cand.push_back({euclid(points[v], points[u]), u});
  }
  std::sort(cand.begin(), cand.end());
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(cand.size()) && i < k; ++i)
    out.push_back(cand[i].second);
  return out;
}

}  // namespace vfts
