#include "reeb/graph.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

#include "reeb/error.hpp"

namespace reeb {

std::string_view to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::BoundaryMinus: return "boundary_minus";
    case VertexKind::BoundaryPlus: return "boundary_plus";
    case VertexKind::Center: return "center";
    case VertexKind::Saddle: return "saddle";
    case VertexKind::Regular: return "regular";
  }
  return "regular";
}

std::string_view to_string(EdgeLabel label) {
  return label == EdgeLabel::Essential ? "essential" : "inessential";
}

std::optional<VertexKind> parse_vertex_kind(std::string_view text) {
  for (auto kind : {VertexKind::BoundaryMinus, VertexKind::BoundaryPlus,
                    VertexKind::Center, VertexKind::Saddle, VertexKind::Regular}) {
    if (text == to_string(kind)) return kind;
  }
  return std::nullopt;
}

std::optional<EdgeLabel> parse_edge_label(std::string_view text) {
  if (text == "essential") return EdgeLabel::Essential;
  if (text == "inessential") return EdgeLabel::Inessential;
  return std::nullopt;
}

bool is_boundary(VertexKind kind) {
  return kind == VertexKind::BoundaryMinus || kind == VertexKind::BoundaryPlus;
}

ReebGraph::ReebGraph(Level lo, Level hi, std::vector<ReebVertex> vertices,
                     std::vector<ReebEdge> edges)
    : lo_(lo), hi_(hi), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (!std::isfinite(lo_) || !std::isfinite(hi_) || !(lo_ < hi_)) {
    fail(ErrorCode::MalformedGraph, "window requires finite lo < hi");
  }
  vertex_by_id_.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& v = vertices_[i];
    if (!std::isfinite(v.level)) {
      fail(ErrorCode::MalformedGraph, "vertex '" + v.id + "' has a non-finite level");
    }
    if (!vertex_by_id_.emplace(v.id, i).second) {
      fail(ErrorCode::MalformedGraph, "duplicate vertex id '" + v.id + "'");
    }
  }
  incident_.resize(vertices_.size());
  ends_.reserve(edges_.size());
  edge_by_id_.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (!edge_by_id_.emplace(e.id, i).second) {
      fail(ErrorCode::MalformedGraph, "duplicate edge id '" + e.id + "'");
    }
    auto lower = vertex_by_id_.find(e.lower);
    auto upper = vertex_by_id_.find(e.upper);
    if (lower == vertex_by_id_.end() || upper == vertex_by_id_.end()) {
      fail(ErrorCode::MalformedGraph,
           "edge '" + e.id + "' references a missing vertex");
    }
    ends_.push_back({lower->second, upper->second});
    incident_[lower->second].push_back(i);
    if (upper->second != lower->second) incident_[upper->second].push_back(i);
  }
}

std::optional<std::size_t> ReebGraph::find_vertex(std::string_view id) const {
  auto it = vertex_by_id_.find(std::string(id));
  if (it == vertex_by_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ReebGraph::find_edge(std::string_view id) const {
  auto it = edge_by_id_.find(std::string(id));
  if (it == edge_by_id_.end()) return std::nullopt;
  return it->second;
}

bool equivalent(const ReebGraph& a, const ReebGraph& b) {
  if (a.lo() != b.lo() || a.hi() != b.hi()) return false;
  auto sorted_vertices = [](const ReebGraph& g) {
    std::vector<ReebVertex> out(g.vertices().begin(), g.vertices().end());
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.id < y.id; });
    return out;
  };
  auto sorted_edges = [](const ReebGraph& g) {
    std::vector<ReebEdge> out(g.edges().begin(), g.edges().end());
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.id < y.id; });
    return out;
  };
  return sorted_vertices(a) == sorted_vertices(b) && sorted_edges(a) == sorted_edges(b);
}

bool ValidationReport::has(std::string_view rule_id) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.rule == rule_id; });
}

namespace {

std::size_t expected_valency(VertexKind kind) {
  switch (kind) {
    case VertexKind::Saddle: return 3;
    case VertexKind::Regular: return 2;
    default: return 1;
  }
}

std::string level_text(Level level) {
  std::ostringstream out;
  out.precision(17);
  out << level;
  return out.str();
}

}  // namespace

ValidationReport validate(const ReebGraph& g, const ValidateOptions& options) {
  ValidationReport report;
  auto add = [&](std::string_view rule_id, std::vector<std::string> ids,
                 std::string note) {
    report.violations.push_back({std::string(rule_id), std::move(ids), std::move(note)});
  };

  const auto vertices = g.vertices();
  const auto edges = g.edges();
  const bool window_graph = std::any_of(vertices.begin(), vertices.end(),
                                        [](const auto& v) { return is_boundary(v.kind); });

  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& v = vertices[i];
    const auto incident = g.incident(i);
    const std::size_t valency = incident.size();

    if (valency != expected_valency(v.kind)) {
      add(rule::kValency, {v.id},
          std::string(to_string(v.kind)) + " vertex has valency " + std::to_string(valency));
    }
    if (v.kind == VertexKind::Regular && !options.allow_regular) {
      add(rule::kRegularVertex, {v.id}, "valency-2 subdivision vertex");
    }

    switch (v.kind) {
      case VertexKind::BoundaryMinus:
        if (v.level != g.lo()) add(rule::kBoundaryLevel, {v.id}, "boundary_minus vertex off lo");
        break;
      case VertexKind::BoundaryPlus:
        if (v.level != g.hi()) add(rule::kBoundaryLevel, {v.id}, "boundary_plus vertex off hi");
        break;
      default: {
        // Extrema of a closed surface may sit on the window ends.
        const bool touching_ok = !window_graph && v.kind == VertexKind::Center;
        const bool inside = touching_ok ? (g.lo() <= v.level && v.level <= g.hi())
                                        : (g.lo() < v.level && v.level < g.hi());
        if (!inside) add(rule::kBoundaryLevel, {v.id}, "interior vertex outside (lo, hi)");
      }
    }

    if (v.kind == VertexKind::Saddle && valency == 3) {
      std::size_t below = 0;
      for (auto e : incident) {
        if (g.upper_of(e) == i) ++below;
      }
      if (below == 0 || below == 3) {
        add(rule::kSaddleShape, {v.id}, "all three branches on one side");
      }
    }

    std::size_t essential = 0;
    for (auto e : incident) {
      if (edges[e].label == EdgeLabel::Essential) ++essential;
    }
    if (v.kind == VertexKind::Saddle && essential == 1) {
      add(rule::kSaddleParity, {v.id}, "exactly one essential branch at a saddle");
    }
    if (v.kind == VertexKind::Center && essential > 0) {
      add(rule::kCenterRule, {v.id}, "essential edge at a center");
    }
  }

  {
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (!is_boundary(vertices[i].kind)) order.push_back(i);
    }
    std::sort(order.begin(), order.end(), [&](auto a, auto b) {
      return std::tie(vertices[a].level, vertices[a].id) <
             std::tie(vertices[b].level, vertices[b].id);
    });
    for (std::size_t k = 1; k < order.size(); ++k) {
      const auto& a = vertices[order[k - 1]];
      const auto& b = vertices[order[k]];
      if (a.level == b.level) {
        add(rule::kGenericity, {a.id, b.id}, "interior vertices share level " + level_text(a.level));
      }
    }
  }

  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!(g.lower_level(e) < g.upper_level(e))) {
      add(rule::kMonotone, {edges[e].id}, "edge does not increase in level");
    }
  }

  if (window_graph) {
    const auto levels = event_levels(g);
    for (std::size_t k = 1; k < levels.size(); ++k) {
      const Level mid = levels[k - 1] + (levels[k] - levels[k - 1]) / 2;
      const bool covered = std::any_of(edges.begin(), edges.end(), [&](const auto& edge) {
        const auto idx = static_cast<std::size_t>(&edge - edges.data());
        return edge.label == EdgeLabel::Essential && g.lower_level(idx) < mid &&
               mid < g.upper_level(idx);
      });
      if (!covered) {
        add(rule::kLevelCoverage, {},
            "no essential edge over (" + level_text(levels[k - 1]) + ", " +
                level_text(levels[k]) + ")");
      }
    }
  }

  return report;
}

std::vector<Level> event_levels(const ReebGraph& g) {
  std::vector<Level> levels{g.lo(), g.hi()};
  for (const auto& v : g.vertices()) levels.push_back(v.level);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

ReebGraph restrict_window(const ReebGraph& g, Level lo, Level hi) {
  if (!(lo < hi) || lo < g.lo() || hi > g.hi()) {
    fail(ErrorCode::InvalidWindow, "window [" + level_text(lo) + ", " + level_text(hi) +
                                       "] is empty or leaves [" + level_text(g.lo()) + ", " +
                                       level_text(g.hi()) + "]");
  }
  for (const auto& v : g.vertices()) {
    if (!is_boundary(v.kind) && (v.level == lo || v.level == hi)) {
      fail(ErrorCode::NonGenericCut, "vertex '" + v.id + "' lies on a window end");
    }
  }

  std::vector<bool> keep_vertex(g.vertex_count(), false);
  std::vector<ReebVertex> cut_vertices;
  std::vector<ReebEdge> edges;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Level a = g.lower_level(e);
    const Level b = g.upper_level(e);
    if (!(a < hi && b > lo)) continue;
    ReebEdge edge = g.edges()[e];
    if (a < lo) {
      edge.lower = edge.id + "@lo";
      cut_vertices.push_back({edge.lower, lo, VertexKind::BoundaryMinus});
    } else {
      keep_vertex[g.lower_of(e)] = true;
    }
    if (b > hi) {
      edge.upper = edge.id + "@hi";
      cut_vertices.push_back({edge.upper, hi, VertexKind::BoundaryPlus});
    } else {
      keep_vertex[g.upper_of(e)] = true;
    }
    // A witness outside the kept span no longer lies in the window.
    if (edge.witness &&
        !(std::max(a, lo) < edge.witness->level && edge.witness->level < std::min(b, hi))) {
      edge.witness.reset();
    }
    edges.push_back(std::move(edge));
  }
  if (edges.empty()) {
    fail(ErrorCode::EmptyWindow, "no edge meets the window");
  }

  std::vector<ReebVertex> vertices;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (keep_vertex[v]) vertices.push_back(g.vertices()[v]);
  }
  vertices.insert(vertices.end(), cut_vertices.begin(), cut_vertices.end());
  return ReebGraph(lo, hi, std::move(vertices), std::move(edges));
}

EssentialSubgraph::EssentialSubgraph(ReebGraph graph) : graph_(std::move(graph)) {
  const auto vertices = graph_.vertices();
  for (const auto& e : graph_.edges()) {
    if (e.label != EdgeLabel::Essential) {
      fail(ErrorCode::InvalidGraph, "edge '" + e.id + "' is not essential");
    }
  }
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    switch (vertices[v].kind) {
      case VertexKind::BoundaryMinus: boundary_minus_.push_back(v); break;
      case VertexKind::BoundaryPlus: boundary_plus_.push_back(v); break;
      default: interior_.push_back(v);
    }
  }
  std::sort(interior_.begin(), interior_.end(),
            [&](auto a, auto b) { return vertices[a].level < vertices[b].level; });
  for (std::size_t k = 1; k < interior_.size(); ++k) {
    if (vertices[interior_[k - 1]].level == vertices[interior_[k]].level) {
      fail(ErrorCode::InvalidGraph, "interior vertices '" + vertices[interior_[k - 1]].id +
                                        "' and '" + vertices[interior_[k]].id +
                                        "' share a level");
    }
  }
  events_.push_back(graph_.lo());
  for (const auto& v : vertices) events_.push_back(v.level);
  std::sort(events_.begin(), events_.end());
  events_.erase(std::unique(events_.begin(), events_.end()), events_.end());
}

Level EssentialSubgraph::probe_before(std::size_t vertex) const {
  const Level level = graph_.vertices()[vertex].level;
  auto it = std::lower_bound(events_.begin(), events_.end(), level);
  if (it == events_.begin()) {
    fail(ErrorCode::InvalidGraph,
         "vertex '" + graph_.vertices()[vertex].id + "' has no level below it");
  }
  const Level previous = *std::prev(it);
  return previous + (level - previous) / 2;
}

EssentialSubgraph essential_subgraph(const ReebGraph& g, const ValidateOptions& options) {
  const auto report = validate(g, options);
  if (!report.ok()) {
    const auto& first = report.violations.front();
    fail(ErrorCode::InvalidGraph, "graph fails validation: " + first.rule + " (" + first.note + ")");
  }
  std::vector<bool> used(g.vertex_count(), false);
  std::vector<ReebEdge> edges;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (g.edges()[e].label != EdgeLabel::Essential) continue;
    used[g.lower_of(e)] = true;
    used[g.upper_of(e)] = true;
    edges.push_back(g.edges()[e]);
  }
  std::vector<ReebVertex> vertices;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (used[v]) vertices.push_back(g.vertices()[v]);
  }
  return EssentialSubgraph(ReebGraph(g.lo(), g.hi(), std::move(vertices), std::move(edges)));
}

}  // namespace reeb
