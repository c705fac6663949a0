#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vfts/core_metric.hpp"
#include "vfts/polygon.hpp"

namespace vfts {

/// On-disk instance: mode "rd" (points in R^d), "polygon" (simple polygon),
/// or "domain" (polygon with holes).
struct InstanceFile {
  int version = 1;
  std::string mode = "rd";
  int d = 2;
  std::vector<WeightedPoint> points;
  std::optional<PolygonalDomain> domain;  // polygon / domain modes

  PolygonalDomain require_domain() const;
};

/// On-disk spanner tied to its instance by hash.
struct SpannerFile {
  int version = 1;
  struct Params {
    int k = 1;
    double eps = 0.5;
    std::string mode = "rd";
    bool refine = false;
    double t_base = 0.0;
    std::uint64_t seed = 0;
  } params;
  int n = 0;
  std::vector<SpannerGraph::Edge> edges;  // u < v, sorted lexicographically
  std::string instance_hash;

  SpannerGraph to_graph() const;
  static SpannerFile from_graph(const SpannerGraph& g, const Params& params,
                                const std::string& hash);
};

/// Canonical text (fixed key order); parse-serialize-parse is the identity.
std::string serialize_instance(const InstanceFile& inst);
InstanceFile parse_instance(const std::string& text);

std::string serialize_spanner(const SpannerFile& sp);
SpannerFile parse_spanner(const std::string& text);

/// FNV-1a (64-bit, hex) over the canonical instance text.
std::string instance_hash(const InstanceFile& inst);

InstanceFile load_instance(const std::string& path);
SpannerFile load_spanner(const std::string& path);
void save_text(const std::string& path, const std::string& text);

}  // namespace vfts
