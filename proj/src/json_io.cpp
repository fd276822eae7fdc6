#include "reeb/json_io.hpp"

#include "reeb/error.hpp"

namespace reeb {

namespace {

Json edge_pair(const std::array<std::uint32_t, 2>& edge) { return Json::array({edge[0], edge[1]}); }

Json to_json(const LevelCycle& cycle) {
  Json crossings = Json::array();
  for (const auto& c : cycle.crossings) {
    crossings.push_back(Json::array({c.triangle, edge_pair(c.entry), edge_pair(c.exit)}));
  }
  return Json{{"level", cycle.level}, {"crossings", std::move(crossings)}};
}

template <typename T>
T required(const Json& json, const char* key, const char* where) {
  if (!json.is_object() || !json.contains(key)) {
    fail(ErrorCode::ParseError, std::string(where) + " lacks key '" + key + "'");
  }
  try {
    return json.at(key).get<T>();
  } catch (const nlohmann::json::exception& err) {
    fail(ErrorCode::ParseError, std::string(where) + "." + key + ": " + err.what());
  }
}

double required_number(const Json& json, const char* key, const char* where) {
  if (!json.is_object() || !json.contains(key) || !json.at(key).is_number()) {
    fail(ErrorCode::ParseError, std::string(where) + "." + key + " must be a number");
  }
  return json.at(key).get<double>();
}

LevelCycle cycle_from_json(const Json& json) {
  LevelCycle cycle;
  cycle.level = required_number(json, "level", "witness");
  const auto crossings = required<Json>(json, "crossings", "witness");
  if (!crossings.is_array()) fail(ErrorCode::ParseError, "witness.crossings must be an array");
  try {
    for (const auto& c : crossings) {
      cycle.crossings.push_back({c.at(0).get<std::uint32_t>(),
                                 {c.at(1).at(0).get<std::uint32_t>(), c.at(1).at(1).get<std::uint32_t>()},
                                 {c.at(2).at(0).get<std::uint32_t>(), c.at(2).at(1).get<std::uint32_t>()}});
    }
  } catch (const nlohmann::json::exception& err) {
    fail(ErrorCode::ParseError, std::string("witness crossing: ") + err.what());
  }
  return cycle;
}

}  // namespace

Json to_json(const ReebGraph& graph) {
  Json vertices = Json::array();
  for (const auto& v : graph.vertices()) {
    vertices.push_back({{"id", v.id}, {"level", v.level}, {"kind", to_string(v.kind)}});
  }
  Json edges = Json::array();
  for (const auto& e : graph.edges()) {
    Json edge{{"id", e.id}, {"lower", e.lower}, {"upper", e.upper}, {"label", to_string(e.label)}};
    if (e.witness) edge["witness"] = to_json(*e.witness);
    edges.push_back(std::move(edge));
  }
  return Json{{"lo", graph.lo()},
              {"hi", graph.hi()},
              {"vertices", std::move(vertices)},
              {"edges", std::move(edges)}};
}

ReebGraph graph_from_json(const Json& json) {
  const double lo = required_number(json, "lo", "graph");
  const double hi = required_number(json, "hi", "graph");
  const auto vertices_json = required<Json>(json, "vertices", "graph");
  const auto edges_json = required<Json>(json, "edges", "graph");
  if (!vertices_json.is_array() || !edges_json.is_array()) {
    fail(ErrorCode::ParseError, "graph.vertices and graph.edges must be arrays");
  }

  std::vector<ReebVertex> vertices;
  for (const auto& v : vertices_json) {
    const auto kind_text = required<std::string>(v, "kind", "vertex");
    const auto kind = parse_vertex_kind(kind_text);
    if (!kind) fail(ErrorCode::ParseError, "unknown vertex kind '" + kind_text + "'");
    vertices.push_back({required<std::string>(v, "id", "vertex"),
                        required_number(v, "level", "vertex"), *kind});
  }
  std::vector<ReebEdge> edges;
  for (const auto& e : edges_json) {
    const auto label_text = required<std::string>(e, "label", "edge");
    const auto label = parse_edge_label(label_text);
    if (!label) fail(ErrorCode::ParseError, "unknown edge label '" + label_text + "'");
    ReebEdge edge{required<std::string>(e, "id", "edge"), required<std::string>(e, "lower", "edge"),
                  required<std::string>(e, "upper", "edge"), *label, std::nullopt};
    if (e.contains("witness") && !e.at("witness").is_null()) {
      edge.witness = cycle_from_json(e.at("witness"));
    }
    edges.push_back(std::move(edge));
  }
  return ReebGraph(lo, hi, std::move(vertices), std::move(edges));
}

ReebGraph parse_graph(std::string_view text) {
  Json json;
  try {
    json = Json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    fail(ErrorCode::ParseError, err.what());
  }
  return graph_from_json(json);
}

Json to_json(const ValidationReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"rule", v.rule}, {"ids", v.ids}, {"note", v.note}});
  }
  return Json{{"ok", report.ok()}, {"violations", std::move(violations)}};
}

Json assignment_to_json(const EssentialSubgraph& g, const PartialAssignment& p,
                        bool with_trace) {
  const auto edges = g.graph().edges();
  Json values = Json::object();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (p.assigned(e)) values[edges[e].id] = p.values()[e];
  }
  Json out{{"edges", std::move(values)}};
  if (with_trace) {
    Json trace = Json::array();
    for (const auto& entry : p.trace()) {
      Json ids = Json::array();
      for (auto e : entry.edges) ids.push_back(edges[e].id);
      trace.push_back({{"step", to_string(entry.step)},
                       {"vertex", entry.vertex ? Json(g.graph().vertices()[*entry.vertex].id)
                                               : Json(nullptr)},
                       {"edges", std::move(ids)},
                       {"value", entry.value}});
    }
    out["trace"] = std::move(trace);
  }
  if (p.complete() && !g.boundary_plus().empty()) {
    const auto bound = distance_bound(g, p);
    out["n_min"] = bound.n_min;
    out["bound"] = bound.bound;
  }
  return out;
}

Json to_json(const EssentialSubgraph& g, const DistanceBoundReport& report) {
  Json per_edge = Json::object();
  for (const auto& [edge, value] : report.per_boundary_edge) {
    per_edge[g.graph().edges()[edge].id] = value;
  }
  return Json{{"per_boundary_edge", std::move(per_edge)},
              {"n_min", report.n_min},
              {"bound", report.bound}};
}

}  // namespace reeb
