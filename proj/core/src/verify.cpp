#include "vfts/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace vfts {

namespace {

constexpr double kStretchTol = 1e-9;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

// Checks all pairs outside `removed`; updates the report in place.
void check_pairs(const SpannerGraph& g, const std::vector<WeightedPoint>& points,
                 const std::vector<int>& removed, const BaseMetric& metric,
                 FaultReport& rep) {
  const int n = g.vertex_count();
  std::set<int> rset(removed.begin(), removed.end());
  for (int p = 0; p < n; ++p) {
    if (rset.count(p)) continue;
    auto dist = graph_distances_from(g, points, p, rset);
    for (int q = p + 1; q < n; ++q) {
      if (rset.count(q)) continue;
      double dw = weighted_distance(points[p], points[q], metric(points[p], points[q]));
      double dg = dist[q];
      ++rep.pairs_checked;
      if (dg != kUnreachable) rep.min_slack = std::min(rep.min_slack, dg - dw);
      double stretch;
      if (dw <= kEpsBoundary)
        stretch = (dg <= kStretchTol) ? 1.0 : kUnreachable;
      else
        stretch = dg / dw;  // unreachable pairs map to infinity
      if (stretch > rep.max_stretch || !rep.witness) {
        rep.max_stretch = std::max(rep.max_stretch, stretch);
        if (!rep.witness || stretch >= rep.witness->stretch)
          rep.witness = FaultWitness{removed, p, q, dg, dw, stretch};
      }
    }
  }
}

void enumerate_removals(int n, int size, std::vector<int>& pick,
                        const std::function<void(const std::vector<int>&)>& fn,
                        int start = 0) {
  if (static_cast<int>(pick.size()) == size) {
    fn(pick);
    return;
  }
  for (int v = start; v < n; ++v) {
    pick.push_back(v);
    enumerate_removals(n, size, pick, fn, v + 1);
    pick.pop_back();
  }
}

double binom(int n, int r) {
  double out = 1.0;
  for (int i = 0; i < r; ++i) out = out * (n - i) / (i + 1);
  return out;
}

}  // namespace

BaseMetric euclidean_metric() {
  return [](const WeightedPoint& a, const WeightedPoint& b) {
    return euclid(a.coords, b.coords);
  };
}

BaseMetric geodesic_metric(const GeodesicEngine& engine) {
  return [&engine](const WeightedPoint& a, const WeightedPoint& b) {
    return engine.distance(a.xy(), b.xy());
  };
}

FaultReport fault_stretch_check(const SpannerGraph& g,
                                const std::vector<WeightedPoint>& points, int k,
                                double t_bound, const BaseMetric& metric, bool exhaustive,
                                int trials, std::uint64_t seed) {
  const int n = g.vertex_count();
  if (n != static_cast<int>(points.size())) throw InvalidInput("graph/point size mismatch");
  if (k < 0) throw InvalidInput("k must be non-negative");

  FaultReport rep;
  rep.exhaustive = exhaustive;
  rep.seed = seed;
  rep.t_bound = t_bound;

  if (exhaustive) {
    double sets = 0.0;
    for (int s = 0; s <= std::min(k, n); ++s) sets += binom(n, s);
    double work = sets * binom(n, 2);
    if (work > 1e6) {
      std::ostringstream os;
      os << "exhaustive fault check needs " << fmt(work)
         << " pair checks (limit 1e6); use sampled mode with about "
         << std::min(2000, static_cast<int>(sets)) << " trials";
      throw InvalidInput(os.str());
    }
    for (int s = 0; s <= std::min(k, n); ++s) {
      std::vector<int> pick;
      enumerate_removals(n, s, pick, [&](const std::vector<int>& removed) {
        check_pairs(g, points, removed, metric, rep);
      });
    }
  } else {
    if (trials <= 0) throw InvalidInput("trials must be positive");
    rep.trials = trials;
    std::mt19937_64 rng(seed);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    const int max_rem = std::min(k, std::max(0, n - 2));
    std::uniform_int_distribution<int> pick_size(0, max_rem);
    // each trial draws one removal set and checks every surviving pair
    for (int t = 0; t < trials; ++t) {
      int rem = pick_size(rng);
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<int> removed(order.begin(), order.begin() + rem);
      std::sort(removed.begin(), removed.end());
      check_pairs(g, points, removed, metric, rep);
    }
  }

  rep.pass = rep.pairs_checked == 0 ||
             (rep.max_stretch <= t_bound + kStretchTol && rep.max_stretch != kUnreachable);
  return rep;
}

SizeReport size_report(const SpannerGraph& g, int k, double eps, int holes) {
  SizeReport rep;
  rep.edge_count = g.edge_count();
  rep.max_degree = g.max_degree();
  const double n = std::max(1, g.vertex_count());
  const double kk = std::max(1, k);
  rep.edges_per_kn = rep.edge_count / (kk * n);
  rep.normalized = rep.edge_count * eps * eps /
                   (kk * n * std::sqrt(holes + 1.0) * std::log2(n + 1.0));
  return rep;
}

std::vector<std::string> check_clustering(const Clustering& cl,
                                          const std::vector<WeightedPoint>& points, int k,
                                          double eps) {
  std::vector<std::string> out;
  const int n = static_cast<int>(points.size());
  auto note = [&](const std::string& s) { out.push_back(s); };

  // weight order: ties broken by id
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (points[a].weight != points[b].weight) return points[a].weight < points[b].weight;
    return a < b;
  });

  const int seeds = std::min(n, k + 1);
  if (static_cast<int>(cl.centers.size()) < seeds)
    note("fewer than min(n, k+1) cluster centers");
  for (int i = 0; i < seeds && i < static_cast<int>(cl.centers.size()); ++i)
    if (cl.centers[i] != order[i])
      note("center " + std::to_string(i) + " is not the " + std::to_string(i) +
           "-th lightest point");

  std::vector<int> seen(n, 0);
  for (std::size_t c = 0; c < cl.members.size(); ++c) {
    const auto& mem = cl.members[c];
    if (mem.empty()) {
      note("empty cluster " + std::to_string(c));
      continue;
    }
    if (mem.front() != cl.centers[c])
      note("cluster " + std::to_string(c) + " does not start with its center");
    double cw = points[cl.centers[c]].weight;
    for (int id : mem) {
      ++seen[id];
      auto it = cl.assignment.find(id);
      if (it == cl.assignment.end() || it->second != static_cast<int>(c))
        note("point " + std::to_string(id) + " not assigned to its cluster");
      if (points[id].weight < cw - kEpsBoundary)
        note("cluster " + std::to_string(c) + " member lighter than its center");
      if (id != cl.centers[c]) {
        double d = euclid(points[id].coords, points[cl.centers[c]].coords);
        if (d > eps * points[id].weight + kEpsAbs)
          note("point " + std::to_string(id) + " is " + fmt(d) +
               " from its center, above eps*w = " + fmt(eps * points[id].weight));
      }
    }
  }
  for (int id = 0; id < n; ++id)
    if (seen[id] != 1) note("point " + std::to_string(id) + " appears in " +
                            std::to_string(seen[id]) + " clusters");
  return out;
}

std::vector<std::string> check_balance(const BuildTrace& trace) {
  std::vector<std::string> out;
  for (const auto& s : trace.splits) {
    const int bound = (2 * s.total + 2) / 3;
    if (s.left + s.right != s.total)
      out.push_back("split loses points: " + std::to_string(s.left) + "+" +
                    std::to_string(s.right) + " != " + std::to_string(s.total));
    int mx = std::max(s.left, s.right);
    if (mx > bound)
      out.push_back("unbalanced split: " + std::to_string(mx) + " of " +
                    std::to_string(s.total));
    if (s.total >= 2 && mx >= s.total)
      out.push_back("split made no progress on " + std::to_string(s.total) + " points");
  }
  for (const auto& s : trace.separators) {
    int budget = static_cast<int>(std::floor(4.0 * std::sqrt(double(s.nodes)) + 1e-9));
    if (s.separator_size > budget)
      out.push_back("separator of " + std::to_string(s.separator_size) + " exceeds 4*sqrt(" +
                    std::to_string(s.nodes) + ")");
    double limit = 2.0 / 3.0 * s.weight_total + kStretchTol;
    if (s.weight_a > limit || s.weight_b > limit)
      out.push_back("separator parts " + fmt(s.weight_a) + "/" + fmt(s.weight_b) +
                    " exceed 2/3 of " + fmt(s.weight_total));
  }
  return out;
}

std::vector<std::string> check_projection_optimality(const PolygonalDomain& dom,
                                                     const std::vector<WeightedPoint>& points,
                                                     const BuildTrace& trace, int samples) {
  std::vector<std::string> out;
  if (samples < 2) throw InvalidInput("need at least 2 samples");
  GeodesicEngine engine{dom};
  for (const auto& ev : trace.events) {
    for (int id : ev.projected_ids) {
      const Vec2 p = points[id].xy();
      auto proj = engine.project(p, ev.segment.a, ev.segment.b);
      for (int j = 0; j < samples; ++j) {
        double t = double(j) / (samples - 1);
        double d = engine.distance(p, ev.segment.at(t));
        if (d + kStretchTol < proj.distance) {
          out.push_back("projection of point " + std::to_string(id) + " at distance " +
                        fmt(proj.distance) + " beaten by sample t=" + fmt(t) + " at " +
                        fmt(d));
          break;
        }
      }
    }
  }
  return out;
}

std::vector<std::string> check_decomposition(const DomainDecomposition& dec, int holes) {
  std::vector<std::string> out;
  const std::size_t cap = 8u * (holes + 1);
  if (dec.faces.size() > cap)
    out.push_back("decomposition has " + std::to_string(dec.faces.size()) +
                  " faces, above 8*(h+1) = " + std::to_string(cap));
  for (std::size_t f = 0; f < dec.faces.size(); ++f) {
    std::size_t c = dec.segments_of_face(static_cast<int>(f)).size();
    if (c > 3)
      out.push_back("face " + std::to_string(f) + " touches " + std::to_string(c) +
                    " segments");
  }
  for (auto [a, b] : dec.segment_faces) {
    if (a < 0 || b < 0 || a >= static_cast<int>(dec.faces.size()) ||
        b >= static_cast<int>(dec.faces.size()) || a == b)
      out.push_back("segment joins invalid face pair (" + std::to_string(a) + ", " +
                    std::to_string(b) + ")");
  }
  return out;
}

std::vector<std::string> check_graph(const SpannerGraph& g,
                                     const std::vector<WeightedPoint>& points,
                                     const BaseMetric& metric) {
  std::vector<std::string> out;
  for (const auto& e : g.edges()) {
    double d = metric(points[e.u], points[e.v]);
    if (std::abs(e.base_length - d) > 1e-9 * (1.0 + d))
      out.push_back("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                    ") stores length " + fmt(e.base_length) + ", metric gives " + fmt(d));
  }
  return out;
}

double graph_distance_relaxation(const SpannerGraph& g,
                                 const std::vector<WeightedPoint>& points, int src, int dst,
                                 const std::set<int>& removed) {
  const int n = g.vertex_count();
  if (src < 0 || src >= n || dst < 0 || dst >= n) throw InvalidInput("vertex out of range");
  if (removed.count(src) || removed.count(dst)) throw InvalidInput("endpoint removed");
  if (src == dst) return 0.0;
  std::vector<double> dist(n, kUnreachable);
  dist[src] = 0.0;
  for (int round = 0; round < n; ++round) {
    bool changed = false;
    for (const auto& e : g.edges()) {
      if (removed.count(e.u) || removed.count(e.v)) continue;
      double w = points[e.u].weight + e.base_length + points[e.v].weight;
      if (dist[e.u] != kUnreachable && dist[e.u] + w < dist[e.v]) {
        dist[e.v] = dist[e.u] + w;
        changed = true;
      }
      if (dist[e.v] != kUnreachable && dist[e.v] + w < dist[e.u]) {
        dist[e.u] = dist[e.v] + w;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return dist[dst];
}

}  // namespace vfts
