#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "reeb/error.hpp"
#include "reeb/genoracle.hpp"

namespace reeb {

PartialAssignment naive_assign(const EssentialSubgraph& g, std::uint64_t scan_seed) {
  const auto& graph = g.graph();
  std::mt19937_64 rng(scan_seed);

  std::map<std::string, Level> level_of;
  std::map<std::string, VertexKind> kind_of;
  std::vector<std::string> vertex_ids;
  for (const auto& v : graph.vertices()) {
    level_of[v.id] = v.level;
    kind_of[v.id] = v.kind;
    vertex_ids.push_back(v.id);
  }
  std::map<std::string, std::uint32_t> value;
  auto assigned = [&](const std::string& edge) { return value.count(edge) != 0; };
  auto incident = [&](const std::string& vertex) {
    std::vector<std::string> out;
    for (const auto& e : graph.edges()) {
      if (e.lower == vertex || e.upper == vertex) out.push_back(e.id);
    }
    return out;
  };

  bool any_minus = false;
  for (const auto& e : graph.edges()) {
    if (kind_of[e.lower] == VertexKind::BoundaryMinus || kind_of[e.upper] == VertexKind::BoundaryMinus) {
      value[e.id] = 1;
      any_minus = true;
    }
  }
  if (!any_minus) fail(ErrorCode::NoLowerBoundary, "no boundary_minus vertex");

  while (true) {
    // Step 1, one vertex at a time until nothing moves.
    bool changed = true;
    while (changed) {
      changed = false;
      std::shuffle(vertex_ids.begin(), vertex_ids.end(), rng);
      for (const auto& v : vertex_ids) {
        const auto edges = incident(v);
        if (edges.size() != 2) continue;
        if (assigned(edges[0]) && !assigned(edges[1])) {
          value[edges[1]] = value[edges[0]];
          changed = true;
        } else if (assigned(edges[1]) && !assigned(edges[0])) {
          value[edges[0]] = value[edges[1]];
          changed = true;
        }
      }
    }
    if (value.size() == graph.edge_count()) break;

    // Step 2: the vertex whose left side is fully assigned.
    std::vector<std::string> qualifying;
    std::shuffle(vertex_ids.begin(), vertex_ids.end(), rng);
    for (const auto& v : vertex_ids) {
      if (is_boundary(kind_of[v])) continue;
      const auto edges = incident(v);
      if (std::all_of(edges.begin(), edges.end(), assigned)) continue;
      bool left_done = true;
      for (const auto& e : graph.edges()) {
        if (level_of[e.lower] < level_of[v] && !assigned(e.id)) left_done = false;
      }
      if (left_done) qualifying.push_back(v);
    }
    if (qualifying.size() != 1) {
      fail(ErrorCode::BrokenUniqueness,
           std::to_string(qualifying.size()) + " vertices qualify for the next step");
    }
    const auto& v = qualifying.front();

    std::set<Level> events{graph.lo()};
    for (const auto& [id, level] : level_of) events.insert(level);
    auto it = events.find(level_of[v]);
    if (it == events.begin()) fail(ErrorCode::EmptyFrontier, "vertex at the window start");
    const Level before = *std::prev(it);
    const Level probe = before + (level_of[v] - before) / 2;

    std::set<std::uint32_t> frontier;
    for (const auto& e : graph.edges()) {
      if (level_of[e.lower] < probe && probe < level_of[e.upper]) {
        if (!assigned(e.id)) fail(ErrorCode::UnassignedFrontier, "edge '" + e.id + "' unassigned");
        frontier.insert(value[e.id]);
      }
    }
    std::uint32_t next = 0;
    if (frontier.empty()) {
      fail(ErrorCode::EmptyFrontier, "nothing crosses the frontier");
    } else if (frontier.size() == 1) {
      next = *frontier.begin() + 1;
    } else if (frontier.size() == 2 && *frontier.rbegin() == *frontier.begin() + 1) {
      next = *frontier.rbegin();
    } else {
      fail(ErrorCode::NonConsecutiveFrontier, "frontier is not one or two consecutive integers");
    }
    for (const auto& e : incident(v)) {
      if (!assigned(e)) value[e] = next;
    }
  }

  PartialAssignment out(graph.edge_count());
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    out.set(e, value.at(graph.edges()[e].id));
  }
  return out;
}

}  // namespace reeb
