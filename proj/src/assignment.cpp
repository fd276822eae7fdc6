#include "reeb/assignment.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "reeb/error.hpp"

namespace reeb {

std::string_view to_string(Step step) {
  switch (step) {
    case Step::Step0: return "Step0";
    case Step::Step1: return "Step1";
    case Step::Step2: return "Step2";
  }
  return "Step0";
}

std::size_t PartialAssignment::assigned_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(values_.begin(), values_.end(), [](auto v) { return v != 0; }));
}

void PartialAssignment::record(Step step, std::optional<std::size_t> vertex,
                               std::vector<std::size_t> edges, std::uint32_t value) {
  for (auto e : edges) values_[e] = value;
  trace_.push_back({step, vertex, std::move(edges), value});
}

FrontierClass classify_values(std::span<const std::uint32_t> values) {
  if (values.empty()) fail(ErrorCode::EmptyFrontier, "no edge crosses the frontier level");
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (*lo == *hi) return {FrontierClass::Kind::AllEqual, *hi};
  if (*hi - *lo == 1) return {FrontierClass::Kind::Consecutive, *hi};
  fail(ErrorCode::NonConsecutiveFrontier, "frontier integers range from " +
                                              std::to_string(*lo) + " to " +
                                              std::to_string(*hi));
}

namespace {

const std::string& vertex_id(const EssentialSubgraph& g, std::size_t v) {
  return g.graph().vertices()[v].id;
}

std::vector<std::uint32_t> frontier_values(const EssentialSubgraph& g,
                                           const PartialAssignment& p, std::size_t vertex) {
  const Level probe = g.probe_before(vertex);
  std::vector<std::uint32_t> values;
  for (std::size_t e = 0; e < g.graph().edge_count(); ++e) {
    if (!g.spans(e, probe)) continue;
    if (!p.assigned(e)) {
      fail(ErrorCode::UnassignedFrontier, "edge '" + g.graph().edges()[e].id +
                                              "' below vertex '" + vertex_id(g, vertex) +
                                              "' is unassigned");
    }
    values.push_back(p.values()[e]);
  }
  return values;
}

}  // namespace

PartialAssignment step0(const EssentialSubgraph& g) {
  if (g.boundary_minus().empty()) {
    fail(ErrorCode::NoLowerBoundary, "essential subgraph has no boundary_minus vertex");
  }
  std::vector<std::size_t> edges;
  for (auto v : g.boundary_minus()) {
    for (auto e : g.graph().incident(v)) edges.push_back(e);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  PartialAssignment p(g.graph().edge_count());
  p.record(Step::Step0, std::nullopt, std::move(edges), 1);
  return p;
}

PartialAssignment step1_saturate(const EssentialSubgraph& g, PartialAssignment p) {
  if (p.size() != g.graph().edge_count()) {
    fail(ErrorCode::IncompleteAssignment, "assignment does not match the subgraph");
  }
  // Wavefront passes: every proposal of a pass is read from the state before
  // the pass, so two different integers reaching one edge are detected.
  std::vector<std::size_t> candidates(g.graph().vertex_count());
  std::iota(candidates.begin(), candidates.end(), std::size_t{0});
  std::vector<std::uint32_t> proposed(p.size(), 0);
  std::vector<std::size_t> source(p.size(), 0);

  while (!candidates.empty()) {
    std::vector<std::size_t> targets;
    for (auto v : candidates) {
      if (g.valency(v) != 2) continue;
      const auto incident = g.graph().incident(v);
      const std::size_t a = incident[0];
      const std::size_t b = incident[1];
      if (p.assigned(a) == p.assigned(b)) continue;
      const std::size_t from = p.assigned(a) ? a : b;
      const std::size_t to = p.assigned(a) ? b : a;
      const std::uint32_t value = p.values()[from];
      if (proposed[to] != 0) {
        if (proposed[to] != value) {
          fail(ErrorCode::ConflictingPropagation,
               "edge '" + g.graph().edges()[to].id + "' receives " +
                   std::to_string(proposed[to]) + " and " + std::to_string(value));
        }
        continue;
      }
      proposed[to] = value;
      source[to] = v;
      targets.push_back(to);
    }

    std::set<std::size_t> next;
    for (auto e : targets) {
      p.record(Step::Step1, source[e], {e}, proposed[e]);
      proposed[e] = 0;
      next.insert(g.graph().lower_of(e));
      next.insert(g.graph().upper_of(e));
    }
    candidates.assign(next.begin(), next.end());
  }
  return p;
}

FrontierClass classify_frontier(const EssentialSubgraph& g, const PartialAssignment& p,
                                std::size_t vertex) {
  const auto values = frontier_values(g, p, vertex);
  return classify_values(values);
}

std::optional<std::size_t> next_vertex(const EssentialSubgraph& g, const PartialAssignment& p) {
  for (auto v : g.interior()) {
    const auto incident = g.graph().incident(v);
    if (std::any_of(incident.begin(), incident.end(), [&](auto e) { return !p.assigned(e); })) {
      return v;
    }
  }
  return std::nullopt;
}

PartialAssignment step2(const EssentialSubgraph& g, PartialAssignment p) {
  if (p.complete()) fail(ErrorCode::NothingToAssign, "every edge is already assigned");
  const auto target = next_vertex(g, p);
  if (!target) {
    fail(ErrorCode::BrokenUniqueness, "unassigned edges remain but no interior vertex touches one");
  }
  const Level level = g.graph().vertices()[*target].level;
  for (std::size_t e = 0; e < g.graph().edge_count(); ++e) {
    if (!p.assigned(e) && g.graph().lower_level(e) < level) {
      fail(ErrorCode::BrokenUniqueness, "edge '" + g.graph().edges()[e].id +
                                            "' is unassigned below vertex '" +
                                            vertex_id(g, *target) + "'");
    }
  }
  const auto frontier = classify_frontier(g, p, *target);
  std::vector<std::size_t> edges;
  for (auto e : g.graph().incident(*target)) {
    if (!p.assigned(e)) edges.push_back(e);
  }
  p.record(Step::Step2, *target, std::move(edges), frontier.next_value());
  return p;
}

PartialAssignment assign_all(const EssentialSubgraph& g, bool check) {
  PartialAssignment p = step1_saturate(g, step0(g));
  // Each Step 2 assigns at least one new edge.
  for (std::size_t round = 0; round <= g.graph().edge_count(); ++round) {
    const auto target = next_vertex(g, p);
    if (check) {
      const auto report = check_invariants(g, p, target);
      if (!report.ok()) {
        const auto& first = report.violations.front();
        std::string where = target ? " at vertex '" + vertex_id(g, *target) + "'" : "";
        fail(ErrorCode::InvariantViolation, first.rule + where + ": " + first.note);
      }
    }
    if (p.complete()) return p;
    p = step1_saturate(g, step2(g, std::move(p)));
  }
  fail(ErrorCode::BrokenUniqueness, "assignment did not terminate");
}

ValidationReport check_invariants(const EssentialSubgraph& g, const PartialAssignment& p,
                                  std::optional<std::size_t> vertex) {
  ValidationReport report;
  const auto& graph = g.graph();
  const auto edges = graph.edges();
  auto add = [&](std::string_view rule_id, std::vector<std::string> ids, std::string note) {
    report.violations.push_back({std::string(rule_id), std::move(ids), std::move(note)});
  };

  // (a) at most one integer per edge over the whole run.
  std::vector<std::size_t> times(p.size(), 0);
  for (const auto& entry : p.trace()) {
    for (auto e : entry.edges) {
      if (++times[e] == 2) add(rule::kSingleAssignment, {edges[e].id}, "edge assigned twice");
    }
  }
  for (auto v : g.boundary_minus()) {
    for (auto e : graph.incident(v)) {
      if (p.assigned(e) && p.values()[e] != 1) {
        add(rule::kLowerAnchor, {edges[e].id}, "boundary_minus edge not assigned 1");
      }
    }
  }
  if (!vertex) {
    if (!p.complete()) add(rule::kUniqueness, {}, "unassigned edges but no next vertex");
    return report;
  }

  const Level level = graph.vertices()[*vertex].level;
  const std::string& vid = vertex_id(g, *vertex);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!p.assigned(e) && graph.lower_level(e) < level) {
      add(rule::kUniqueness, {edges[e].id, vid}, "unassigned edge below the next vertex");
    }
  }

  // (b) frontier just below the vertex.
  const Level probe = g.probe_before(*vertex);
  std::vector<std::uint32_t> frontier;
  bool frontier_complete = true;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!g.spans(e, probe)) continue;
    if (p.assigned(e)) {
      frontier.push_back(p.values()[e]);
    } else {
      frontier_complete = false;
    }
  }
  if (frontier.empty()) {
    add(rule::kFrontier, {vid}, "no assigned edge below the vertex");
    return report;
  }
  const std::uint32_t m = *std::max_element(frontier.begin(), frontier.end());
  try {
    classify_values(frontier);
    if (!frontier_complete) add(rule::kFrontier, {vid}, "frontier has unassigned edges");
  } catch (const Error& err) {
    add(rule::kFrontier, {vid}, err.what());
  }

  // (c) assigned edges reaching right of the vertex carry m-1 or m.
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!p.assigned(e) || !(graph.upper_level(e) > level)) continue;
    const auto value = p.values()[e];
    if (value != m && value + 1 != m) {
      add(rule::kRightBand, {edges[e].id, vid},
          "edge right of the vertex carries " + std::to_string(value) + ", expected " +
              std::to_string(m - 1) + " or " + std::to_string(m));
    }
  }

  // (d) one probe per event gap from the frontier gap upward.
  std::vector<Level> levels(g.events().begin(), g.events().end());
  if (levels.back() < graph.hi()) levels.push_back(graph.hi());
  std::vector<Level> probes{probe};
  for (std::size_t k = 1; k < levels.size(); ++k) {
    if (levels[k - 1] >= level) probes.push_back(levels[k - 1] + (levels[k] - levels[k - 1]) / 2);
  }

  for (const Level q : probes) {
    std::set<std::uint32_t> seen;
    std::vector<std::size_t> seeds;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (p.assigned(e) && g.spans(e, q)) {
        seen.insert(p.values()[e]);
        seeds.push_back(e);
      }
    }
    if (seen.size() > 1) continue;

    std::vector<std::size_t> beyond;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (p.assigned(e) && graph.upper_level(e) > q) beyond.push_back(e);
    }
    if (seen.empty()) {
      for (auto e : beyond) {
        add(rule::kRightBand, {edges[e].id}, "(ii)' assigned edge beyond an empty level");
      }
      continue;
    }
    const std::uint32_t band = *seen.begin();

    // (i)'
    bool uniform = true;
    for (auto e : beyond) {
      if (p.values()[e] != band) {
        uniform = false;
        add(rule::kRightBand, {edges[e].id},
            "(i)' edge carries " + std::to_string(p.values()[e]) + " beyond a level of " +
                std::to_string(band));
      }
    }
    if (!uniform) continue;

    // (ii)' reachability through edges carrying `band`.
    std::vector<bool> reached(edges.size(), false);
    std::vector<bool> visited(graph.vertex_count(), false);
    std::vector<std::size_t> stack;
    for (auto e : seeds) {
      reached[e] = true;
      stack.push_back(graph.lower_of(e));
      stack.push_back(graph.upper_of(e));
    }
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      if (visited[v]) continue;
      visited[v] = true;
      for (auto e : graph.incident(v)) {
        if (reached[e] || !p.assigned(e) || p.values()[e] != band) continue;
        reached[e] = true;
        stack.push_back(graph.lower_of(e));
        stack.push_back(graph.upper_of(e));
      }
    }
    for (auto e : beyond) {
      if (!reached[e]) {
        add(rule::kRightBand, {edges[e].id},
            "(ii)' edge not joined to the probe level through edges of " + std::to_string(band));
      }
    }
  }
  return report;
}

DistanceBoundReport distance_bound(const EssentialSubgraph& g, const PartialAssignment& p) {
  if (g.boundary_plus().empty()) {
    fail(ErrorCode::NoUpperBoundary, "essential subgraph has no boundary_plus vertex");
  }
  if (p.size() != g.graph().edge_count() || !p.complete()) {
    fail(ErrorCode::IncompleteAssignment, "assignment is not complete");
  }
  std::vector<std::size_t> edges;
  for (auto v : g.boundary_plus()) {
    for (auto e : g.graph().incident(v)) edges.push_back(e);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  DistanceBoundReport report;
  report.n_min = p.values()[edges.front()];
  for (auto e : edges) {
    report.per_boundary_edge.emplace_back(e, p.values()[e]);
    report.n_min = std::min(report.n_min, p.values()[e]);
  }
  report.bound = report.n_min + 1;
  return report;
}

}  // namespace reeb
