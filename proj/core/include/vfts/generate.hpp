#pragma once

#include <cstdint>
#include <string>

#include "vfts/instance_io.hpp"

namespace vfts {

/// Canned polygons by name: "convex-N" (regular N-gon), "lshape", "ushape",
/// "comb-N" (N teeth), "random-N" (seeded star polygon).
SimplePolygon shape_polygon(const std::string& name, std::uint64_t seed = 0);

/// Domains: "square-hole", "square-2holes", or any polygon name (no holes).
PolygonalDomain shape_domain(const std::string& name, std::uint64_t seed = 0);

struct GenerateOptions {
  std::string mode = "rd";  // rd | polygon | domain
  int n = 20;
  int d = 2;                // rd only
  std::string shape = "convex-8";
  double weight_min = 0.0;
  double weight_max = 1.0;
  std::uint64_t seed = 0;
};

/// Seeded instance generator; polygon/domain points are rejection-sampled
/// strictly inside the free space (fails after 10^6 draws).
InstanceFile generate_instance(const GenerateOptions& opts);

}  // namespace vfts
