#include "vfts/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>

namespace vfts {

namespace {

double path_length(const std::vector<Vec2>& pts) {
  double len = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) len += dist(pts[i], pts[i + 1]);
  return len;
}

// Funnel ("string pulling") through a sleeve of portals.
std::vector<Vec2> run_funnel(const Vec2& start, const Vec2& goal,
                             const std::vector<std::pair<Vec2, Vec2>>& portals) {
  std::vector<Vec2> path{start};
  Vec2 apex = start, left = start, right = start;
  int apex_i = 0, left_i = 0, right_i = 0;

  std::vector<std::pair<Vec2, Vec2>> ps = portals;
  ps.push_back({goal, goal});

  for (int i = 0; i < static_cast<int>(ps.size()); ++i) {
    const Vec2& pl = ps[i].first;
    const Vec2& pr = ps[i].second;

    // tighten right edge: pr is left of (or on) the current right boundary
    if (orient(apex, right, pr) >= 0.0) {
      if ((apex.x == right.x && apex.y == right.y) || orient(apex, left, pr) < 0.0) {
        right = pr;
        right_i = i;
      } else {
        path.push_back(left);
        apex = left;
        apex_i = left_i;
        left = right = apex;
        left_i = right_i = apex_i;
        i = apex_i;
        continue;
      }
    }
    // tighten left edge: pl is right of (or on) the current left boundary
    if (orient(apex, left, pl) <= 0.0) {
      if ((apex.x == left.x && apex.y == left.y) || orient(apex, right, pl) > 0.0) {
        left = pl;
        left_i = i;
      } else {
        path.push_back(right);
        apex = right;
        apex_i = right_i;
        left = right = apex;
        left_i = right_i = apex_i;
        i = apex_i;
        continue;
      }
    }
  }
  if (path.back().x != goal.x || path.back().y != goal.y) path.push_back(goal);
  // drop consecutive duplicates
  std::vector<Vec2> out;
  for (const auto& p : path) {
    if (out.empty() || dist(out.back(), p) > 0.0) out.push_back(p);
  }
  return out;
}

}  // namespace

struct GeodesicEngine::Impl {
  PolygonalDomain dom;
  bool simple = false;  // no holes: funnel machinery below is active

  // simple-polygon structures
  std::vector<Triangle> tris;
  std::vector<std::array<int, 3>> tri_adj;  // neighbor triangle per edge, -1 if boundary

  // domain-with-holes structures
  std::vector<Vec2> vis_verts;
  std::vector<std::vector<std::pair<int, double>>> vis_adj;

  explicit Impl(PolygonalDomain d) : dom(std::move(d)) {
    simple = dom.hole_count() == 0;
    if (simple)
      build_triangulation();
    else
      build_visibility();
  }

  void build_triangulation() {
    tris = triangulate(dom.outer());
    const int t = static_cast<int>(tris.size());
    tri_adj.assign(t, {-1, -1, -1});
    std::map<std::pair<int, int>, std::pair<int, int>> edge_owner;  // edge -> (tri, slot)
    for (int i = 0; i < t; ++i) {
      int vid[3] = {tris[i].a, tris[i].b, tris[i].c};
      for (int e = 0; e < 3; ++e) {
        int u = vid[e], v = vid[(e + 1) % 3];
        auto key = std::minmax(u, v);
        auto it = edge_owner.find({key.first, key.second});
        if (it == edge_owner.end()) {
          edge_owner[{key.first, key.second}] = {i, e};
        } else {
          tri_adj[i][e] = it->second.first;
          tri_adj[it->second.first][it->second.second] = i;
        }
      }
    }
  }

  void build_visibility() {
    vis_verts = dom.all_vertices();
    const int n = static_cast<int>(vis_verts.size());
    vis_adj.assign(n, {});
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (dist(vis_verts[i], vis_verts[j]) == 0.0) continue;
        if (dom.segment_in_free_space(vis_verts[i], vis_verts[j])) {
          double d = dist(vis_verts[i], vis_verts[j]);
          vis_adj[i].push_back({j, d});
          vis_adj[j].push_back({i, d});
        }
      }
    }
  }

  int locate_triangle(const Vec2& p) const {
    const auto& v = dom.outer().vertices();
    double best = -std::numeric_limits<double>::max();
    int besti = -1;
    for (int i = 0; i < static_cast<int>(tris.size()); ++i) {
      const Vec2 &a = v[tris[i].a], &b = v[tris[i].b], &c = v[tris[i].c];
      double m = std::min({orient(a, b, p), orient(b, c, p), orient(c, a, p)});
      if (m >= -kEpsBoundary) return i;  // inside or on boundary
      if (m > best) {
        best = m;
        besti = i;
      }
    }
    if (best > -1e-7) return besti;  // numeric slack for points snapped to edges
    throw InvalidInput("point outside free space");
  }

  GeodesicPath simple_path(const Vec2& a, const Vec2& b) const {
    int ta = locate_triangle(a);
    int tb = locate_triangle(b);
    if (ta == tb) return {{a, b}, dist(a, b)};

    // sleeve: tree path between triangles in the dual
    std::vector<int> parent(tris.size(), -2);
    std::queue<int> q;
    q.push(ta);
    parent[ta] = -1;
    while (!q.empty()) {
      int cur = q.front();
      q.pop();
      if (cur == tb) break;
      for (int e = 0; e < 3; ++e) {
        int nb = tri_adj[cur][e];
        if (nb >= 0 && parent[nb] == -2) {
          parent[nb] = cur;
          q.push(nb);
        }
      }
    }
    if (parent[tb] == -2) throw InvalidInput("disconnected triangulation");
    std::vector<int> sleeve;
    for (int cur = tb; cur != -1; cur = parent[cur]) sleeve.push_back(cur);
    std::reverse(sleeve.begin(), sleeve.end());

    const auto& v = dom.outer().vertices();
    auto centroid = [&](int t) {
      const Vec2 &x = v[tris[t].a], &y = v[tris[t].b], &z = v[tris[t].c];
      return Vec2{(x.x + y.x + z.x) / 3.0, (x.y + y.y + z.y) / 3.0};
    };

    std::vector<std::pair<Vec2, Vec2>> portals;  // (left, right)
    for (std::size_t s = 0; s + 1 < sleeve.size(); ++s) {
      int cur = sleeve[s], nxt = sleeve[s + 1];
      int vid[3] = {tris[cur].a, tris[cur].b, tris[cur].c};
      int eu = -1, ev = -1;
      for (int e = 0; e < 3; ++e) {
        if (tri_adj[cur][e] == nxt) {
          eu = vid[e];
          ev = vid[(e + 1) % 3];
          break;
        }
      }
      Vec2 u = v[eu], w = v[ev];
      Vec2 mid{(u.x + w.x) / 2.0, (u.y + w.y) / 2.0};
      Vec2 dir = centroid(nxt) - centroid(cur);
      if (cross(dir, u - mid) > 0.0)
        portals.push_back({u, w});
      else
        portals.push_back({w, u});
    }

    auto pts = run_funnel(a, b, portals);
    return {pts, path_length(pts)};
  }

  GeodesicPath holes_path(const Vec2& a, const Vec2& b) const {
    if (!dom.in_free_space(a) || !dom.in_free_space(b))
      throw InvalidInput("point outside free space");
    if (dom.segment_in_free_space(a, b)) return {{a, b}, dist(a, b)};

    const int n = static_cast<int>(vis_verts.size());
    const int src = n, dst = n + 1;
    // adjacency with the two query points appended
    std::vector<std::vector<std::pair<int, double>>> adj = vis_adj;
    adj.resize(n + 2);
    for (int i = 0; i < n; ++i) {
      if (dom.segment_in_free_space(a, vis_verts[i])) {
        double d = dist(a, vis_verts[i]);
        adj[src].push_back({i, d});
        adj[i].push_back({src, d});
      }
      if (dom.segment_in_free_space(b, vis_verts[i])) {
        double d = dist(b, vis_verts[i]);
        adj[dst].push_back({i, d});
        adj[i].push_back({dst, d});
      }
    }

    std::vector<double> distv(n + 2, std::numeric_limits<double>::infinity());
    std::vector<int> par(n + 2, -1);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    distv[src] = 0.0;
    heap.push({0.0, src});
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (d > distv[u]) continue;
      for (auto [w, len] : adj[u]) {
        if (d + len < distv[w]) {
          distv[w] = d + len;
          par[w] = u;
          heap.push({d + len, w});
        }
      }
    }
    if (!std::isfinite(distv[dst])) throw InvalidInput("no geodesic path found");
    std::vector<Vec2> pts;
    for (int cur = dst; cur != -1; cur = par[cur])
      pts.push_back(cur == src ? a : (cur == dst ? b : vis_verts[cur]));
    std::reverse(pts.begin(), pts.end());
    return {pts, path_length(pts)};
  }
};

GeodesicEngine::GeodesicEngine(PolygonalDomain dom)
    : impl_(std::make_unique<Impl>(std::move(dom))) {}
GeodesicEngine::~GeodesicEngine() = default;
GeodesicEngine::GeodesicEngine(GeodesicEngine&&) noexcept = default;
GeodesicEngine& GeodesicEngine::operator=(GeodesicEngine&&) noexcept = default;

const PolygonalDomain& GeodesicEngine::domain() const { return impl_->dom; }

GeodesicPath GeodesicEngine::shortest_path(const Vec2& a, const Vec2& b) const {
  if (dist(a, b) == 0.0) return {{a}, 0.0};
  if (impl_->simple) {
    if (!impl_->dom.in_free_space(a) || !impl_->dom.in_free_space(b))
      throw InvalidInput("point outside free space");
    return impl_->simple_path(a, b);
  }
  return impl_->holes_path(a, b);
}

double GeodesicEngine::distance(const Vec2& a, const Vec2& b) const {
  return shortest_path(a, b).length;
}

GeodesicEngine::Projection GeodesicEngine::project(const Vec2& p, const Vec2& s0,
                                                   const Vec2& s1) const {
  const double seg_len = dist(s0, s1);
  auto at = [&](double t) { return s0 + (s1 - s0) * t; };

  if (seg_len == 0.0) return {s0, distance(p, s0), 0.0};

  // Euclidean foot; optimal whenever visible since d_pi >= Euclidean.
  Vec2 foot = closest_point_on_segment(s0, s1, p);
  if (impl_->dom.segment_in_free_space(p, foot)) {
    double t = dist(s0, foot) / seg_len;
    return {foot, dist(p, foot), t};
  }

  // Coarse scan, then golden-section refinement around each local minimum.
  constexpr int kCoarse = 256;
  std::vector<double> ts(kCoarse + 1), ds(kCoarse + 1);
  for (int i = 0; i <= kCoarse; ++i) {
    ts[i] = static_cast<double>(i) / kCoarse;
    ds[i] = distance(p, at(ts[i]));
  }
  auto golden = [&](double lo, double hi) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
    double f1 = distance(p, at(x1)), f2 = distance(p, at(x2));
    while (hi - lo > 1e-10) {
      if (f1 <= f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - phi * (hi - lo);
        f1 = distance(p, at(x1));
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + phi * (hi - lo);
        f2 = distance(p, at(x2));
      }
    }
    double t = 0.5 * (lo + hi);
    return std::pair<double, double>{t, distance(p, at(t))};
  };

  double best_t = ts[0], best_d = ds[0];
  auto consider = [&](double t, double d) {
    if (d < best_d - 1e-12 || (d <= best_d + 1e-12 && t < best_t)) {
      best_d = d;
      best_t = t;
    }
  };
  consider(ts[kCoarse], ds[kCoarse]);
  for (int i = 1; i < kCoarse; ++i) {
    if (ds[i] <= ds[i - 1] && ds[i] <= ds[i + 1]) {
      auto [t, d] = golden(ts[i - 1], ts[i + 1]);
      consider(t, d);
    }
  }
  return {at(best_t), best_d, best_t};
}

}  // namespace vfts
