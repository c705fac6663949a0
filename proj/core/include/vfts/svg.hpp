#pragma once

#include <set>
#include <string>

#include "vfts/instance_io.hpp"

namespace vfts {

/// SVG 1.1 figure: polygon with holes, spanner edges, points sized by weight,
/// removed vertices crossed out. Data coordinates, fixed viewport; the output
/// is byte-identical for equal inputs.
std::string render_svg(const InstanceFile& inst, const SpannerGraph* spanner = nullptr,
                       const std::set<int>* removed = nullptr);

}  // namespace vfts
