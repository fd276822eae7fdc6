#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "reeb/graph.hpp"

namespace reeb {

/// Edge id -> assigned integer; edges without an entry are drawn unannotated.
using EdgeNumbers = std::map<std::string, std::uint32_t>;

/// Left-to-right layout: x is the level, y the strand slot. Strands are kept
/// in a list swept through the vertices in level order; a vertex replaces
/// its incoming strands with its outgoing ones at the lowest freed slot.
struct Layout {
  std::map<std::string, std::pair<double, double>> vertex;          // id -> (level, slot)
  std::map<std::string, std::vector<std::pair<double, double>>> edge;  // id -> polyline
  double slots = 1.0;
};

Layout layered_layout(const ReebGraph& graph);

std::string to_dot(const ReebGraph& graph, const EdgeNumbers& numbers);
std::string to_svg(const ReebGraph& graph, const EdgeNumbers& numbers);

}  // namespace reeb
