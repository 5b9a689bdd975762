#ifndef SQZ_SVG_HPP
#define SQZ_SVG_HPP

#include <string>
#include <utility>
#include <vector>

#include "sqz/arcs.hpp"
#include "sqz/regions.hpp"

namespace sqz {

// Display-only output: coordinates are rounded doubles, everything else in
// the pipeline stays exact. Layers render in order; output is deterministic
// for fixed inputs (fixed formatting, no timestamps).

struct RegionLayer {
  RegionSet region;
  std::string color;
  std::string label;
};

struct ArcLayer {
  Arc arc;
  std::string color;
  std::string label;
};

std::string svg_regions(const std::vector<RegionLayer>& layers);
std::string svg_arcs(const std::vector<ArcLayer>& layers);

}  // namespace sqz

#endif
