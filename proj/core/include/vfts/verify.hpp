#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vfts/cluster_spanner.hpp"
#include "vfts/core_metric.hpp"
#include "vfts/geodesic.hpp"
#include "vfts/polygon_spanner.hpp"

namespace vfts {

/// Base (unweighted) distance between two points' locations.
using BaseMetric = std::function<double(const WeightedPoint&, const WeightedPoint&)>;

BaseMetric euclidean_metric();
/// The engine must outlive the returned metric.
BaseMetric geodesic_metric(const GeodesicEngine& engine);

/// Worst surviving pair found by a fault check.
struct FaultWitness {
  std::vector<int> removed;
  int p = -1;
  int q = -1;
  double graph_dist = 0.0;
  double metric_dist = 0.0;
  double stretch = 0.0;
};

struct FaultReport {
  bool exhaustive = true;
  std::uint64_t seed = 0;
  int trials = 0;  // sampled mode only
  double t_bound = 0.0;
  double max_stretch = 0.0;
  /// min over all checked pairs of d_G(p,q) - d_w(p,q); a negative value
  /// means some spanner path undercuts the metric (a length bug).
  double min_slack = std::numeric_limits<double>::infinity();
  std::uint64_t pairs_checked = 0;
  bool pass = false;
  std::optional<FaultWitness> witness;
};

/// Checks that after deleting any vertex set of size <= k, every surviving
/// pair (p, q) satisfies d_G(p, q) <= t_bound * d_w(p, q). Exhaustive mode
/// enumerates all removal sets and pairs; it refuses (InvalidInput) when that
/// exceeds 10^6 pair checks. Sampled mode draws `trials` random
/// (removal set, pair) combinations from a seeded generator.
FaultReport fault_stretch_check(const SpannerGraph& g,
                                const std::vector<WeightedPoint>& points, int k,
                                double t_bound, const BaseMetric& metric,
                                bool exhaustive = true, int trials = 2000,
                                std::uint64_t seed = 0);

struct SizeReport {
  std::size_t edge_count = 0;
  int max_degree = 0;
  double edges_per_kn = 0.0;   // |E| / (max(1,k) * n)
  double normalized = 0.0;     // |E| eps^2 / (max(1,k) n sqrt(h+1) lg(n+1))
};

SizeReport size_report(const SpannerGraph& g, int k, double eps, int holes = 0);

/// Structural invariants; each returns human-readable violations (empty = ok).
std::vector<std::string> check_clustering(const Clustering& cl,
                                          const std::vector<WeightedPoint>& points, int k,
                                          double eps);

/// Split balance (each side <= ceil(2m/3), strict progress) and separator
/// balance (parts <= 2/3 of the weight, size <= 4 sqrt(m)).
std::vector<std::string> check_balance(const BuildTrace& trace);

/// Faces bounded by at most 3 segments, face count <= 8 (h+1), segments
/// joining existing faces.
std::vector<std::string> check_decomposition(const DomainDecomposition& dec, int holes);

/// Every edge's base_length must equal the metric distance of its endpoints
/// to 1e-9 relative tolerance.
std::vector<std::string> check_graph(const SpannerGraph& g,
                                     const std::vector<WeightedPoint>& points,
                                     const BaseMetric& metric);

/// Re-projects every traced point onto its segment and compares against
/// `samples` evenly spaced segment points; the projection must not lose.
std::vector<std::string> check_projection_optimality(const PolygonalDomain& dom,
                                                     const std::vector<WeightedPoint>& points,
                                                     const BuildTrace& trace,
                                                     int samples = 64);

/// Independent shortest-path computation (iterative edge relaxation, no
/// shared code with graph_distance) for cross-checks.
double graph_distance_relaxation(const SpannerGraph& g,
                                 const std::vector<WeightedPoint>& points, int src, int dst,
                                 const std::set<int>& removed = {});

}  // namespace vfts
