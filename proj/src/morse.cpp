#include "reeb/morse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "reeb/error.hpp"

namespace reeb {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Arcs {
  std::size_t lower_arcs = 0;
  std::size_t lower = 0;
  std::size_t upper = 0;
};

Arcs link_arcs(const TriangulatedSurface& s, const ScalarField& f, std::uint32_t v) {
  const auto ring = s.link(v);
  Arcs arcs;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const bool low = f.below(ring[i], v);
    const bool prev_low = f.below(ring[(i + ring.size() - 1) % ring.size()], v);
    if (low) {
      ++arcs.lower;
      if (!prev_low) ++arcs.lower_arcs;
    } else {
      ++arcs.upper;
    }
  }
  return arcs;
}

CriticalType critical_type(const Arcs& arcs, std::uint32_t v) {
  if (arcs.lower == 0) return CriticalType::Minimum;
  if (arcs.upper == 0) return CriticalType::Maximum;
  if (arcs.lower_arcs == 1) return CriticalType::Regular;
  if (arcs.lower_arcs == 2) return CriticalType::Saddle;
  fail(ErrorCode::DegenerateField, "vertex " + std::to_string(v) + " is a monkey saddle with " +
                                       std::to_string(arcs.lower_arcs) +
                                       " lower arcs; subdivide the mesh around it");
}

class ContourSweep {
 public:
  struct Node {
    std::uint32_t mesh_vertex;
    VertexKind kind;
    Level level;
  };
  struct Arc {
    std::size_t lower;
    std::size_t upper = kNone;
  };

  ContourSweep(const TriangulatedSurface& s, const ScalarField& f)
      : s_(s), f_(f), label_(s.edge_count(), kNone) {}

  bool crossing(std::size_t edge, std::size_t slot) const {
    const auto [a, b] = s_.edges()[edge];
    const auto ra = f_.rank(a);
    const auto rb = f_.rank(b);
    return std::min(ra, rb) <= slot && slot < std::max(ra, rb);
  }

  Level slot_level(std::size_t slot) const {
    const double a = f_.value(f_.at_rank(slot));
    const double b = f_.value(f_.at_rank(slot + 1));
    return a + (b - a) / 2;
  }

  /// Follows the level loop through `start`; returns the loop and the mesh
  /// edges it crosses.
  LevelCycle walk(std::size_t start, std::size_t slot, std::vector<std::size_t>* crossed) const {
    LevelCycle cycle;
    cycle.level = slot_level(slot);
    std::size_t edge = start;
    std::uint32_t tri = s_.edge_triangles(start)[0];
    do {
      std::size_t exit = kNone;
      for (auto e : s_.triangle_edges(tri)) {
        if (e != edge && crossing(e, slot)) exit = e;
      }
      if (exit == kNone) fail(ErrorCode::OpenCycle, "level loop ends inside a triangle");
      cycle.crossings.push_back({tri, s_.edges()[edge], s_.edges()[exit]});
      if (crossed) crossed->push_back(edge);
      const auto& pair = s_.edge_triangles(exit);
      tri = pair[0] == tri ? pair[1] : pair[0];
      edge = exit;
    } while (edge != start);
    return cycle;
  }

  template <typename Visit>
  void run(Visit&& visit) {
    Level last_level = -std::numeric_limits<Level>::infinity();
    for (std::size_t r = 0; r < f_.size(); ++r) {
      const std::uint32_t v = f_.at_rank(r);
      const auto arcs = link_arcs(s_, f_, v);
      const auto type = critical_type(arcs, v);

      std::vector<std::size_t> lower_edges;
      std::vector<std::size_t> arc_starts;  // first upper edge of each upper arc
      const auto ring = s_.link(v);
      for (std::size_t i = 0; i < ring.size(); ++i) {
        const auto e = *s_.find_edge(v, ring[i]);
        const bool low = f_.below(ring[i], v);
        if (low) {
          lower_edges.push_back(e);
        } else if (f_.below(ring[(i + ring.size() - 1) % ring.size()], v)) {
          arc_starts.push_back(e);
        }
      }
      std::set<std::size_t> below;
      for (auto e : lower_edges) below.insert(label_[e]);

      if (type == CriticalType::Regular) {
        if (below.size() != 1) {
          fail(ErrorCode::DegenerateField, "regular vertex " + std::to_string(v) + " joins contours");
        }
        label_upper(v, *below.begin());
        visit(r);
        continue;
      }

      Level level = f_.value(v);
      if (level <= last_level) level = std::nextafter(last_level, std::numeric_limits<Level>::infinity());
      last_level = level;
      const std::size_t node = nodes_.size();
      nodes_.push_back({v, type == CriticalType::Saddle ? VertexKind::Saddle : VertexKind::Center, level});
      for (auto arc : below) arcs_[arc].upper = node;

      if (type == CriticalType::Minimum) {
        label_upper(v, open(node));
      } else if (type == CriticalType::Saddle) {
        std::vector<std::vector<std::size_t>> contours;
        for (auto start : arc_starts) {
          const bool seen = std::any_of(contours.begin(), contours.end(), [&](const auto& c) {
            return std::find(c.begin(), c.end(), start) != c.end();
          });
          if (seen) continue;
          std::vector<std::size_t> crossed;
          walk(start, r, &crossed);
          contours.push_back(std::move(crossed));
        }
        const bool split = below.size() == 1 && contours.size() == 2;
        const bool merge = below.size() == 2 && contours.size() == 1;
        if (!split && !merge) {
          fail(ErrorCode::DegenerateField, "saddle at vertex " + std::to_string(v) +
                                               " keeps the contour count unchanged");
        }
        for (const auto& contour : contours) {
          const auto arc = open(node);
          for (auto e : contour) label_[e] = arc;
        }
      }
      visit(r);
    }
  }

  std::size_t label(std::size_t edge) const { return label_[edge]; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

 private:
  std::size_t open(std::size_t node) {
    arcs_.push_back({node});
    return arcs_.size() - 1;
  }

  void label_upper(std::uint32_t v, std::size_t arc) {
    for (auto u : s_.link(v)) {
      if (f_.below(v, u)) label_[*s_.find_edge(v, u)] = arc;
    }
  }

  const TriangulatedSurface& s_;
  const ScalarField& f_;
  std::vector<std::size_t> label_;
  std::vector<Node> nodes_;
  std::vector<Arc> arcs_;
};

std::string node_id(std::size_t k) { return "v" + std::to_string(k); }
std::string arc_id(std::size_t k) { return "e" + std::to_string(k); }

}  // namespace

CriticalType classify_vertex(const TriangulatedSurface& surface, const ScalarField& field,
                             std::uint32_t vertex) {
  return critical_type(link_arcs(surface, field, vertex), vertex);
}

std::vector<LevelCycle> level_cycles(const TriangulatedSurface& surface, const ScalarField& field,
                                     std::size_t slot) {
  if (slot + 1 >= field.size()) fail(ErrorCode::InvalidParams, "slot past the last vertex");
  ContourSweep sweep(surface, field);
  std::vector<bool> done(surface.edge_count(), false);
  std::vector<LevelCycle> cycles;
  for (std::size_t e = 0; e < surface.edge_count(); ++e) {
    if (done[e] || !sweep.crossing(e, slot)) continue;
    std::vector<std::size_t> crossed;
    cycles.push_back(sweep.walk(e, slot, &crossed));
    for (auto c : crossed) done[c] = true;
  }
  return cycles;
}

ReebGraph build_reeb(const TriangulatedSurface& surface, const ScalarField& field) {
  ContourSweep first(surface, field);
  first.run([](std::size_t) {});
  const auto& nodes = first.nodes();
  const auto& arcs = first.arcs();

  // Witness gap: the last vertex gap of the span whose lower value does not
  // pass the span midpoint.
  std::map<std::size_t, std::vector<std::size_t>> wanted;
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const auto& lower = nodes[arcs[k].lower];
    const auto& upper = nodes[arcs[k].upper];
    const std::size_t begin = field.rank(lower.mesh_vertex);
    const std::size_t end = field.rank(upper.mesh_vertex);
    const double mid = lower.level + (upper.level - lower.level) / 2;
    std::size_t slot = begin;
    while (slot + 1 < end && field.value(field.at_rank(slot + 1)) <= mid) ++slot;
    wanted[slot].push_back(k);
  }

  std::vector<std::optional<LevelCycle>> witness(arcs.size());
  ContourSweep second(surface, field);
  second.run([&](std::size_t slot) {
    auto it = wanted.find(slot);
    if (it == wanted.end()) return;
    for (auto k : it->second) {
      for (std::size_t e = 0; e < surface.edge_count(); ++e) {
        if (second.label(e) == k && second.crossing(e, slot)) {
          witness[k] = second.walk(e, slot, nullptr);
          break;
        }
      }
    }
  });

  std::vector<ReebVertex> vertices;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    vertices.push_back({node_id(k), nodes[k].level, nodes[k].kind});
  }
  std::vector<ReebEdge> edges;
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    if (!witness[k]) fail(ErrorCode::MissingWitness, "no loop found for edge " + arc_id(k));
    edges.push_back({arc_id(k), node_id(arcs[k].lower), node_id(arcs[k].upper),
                     EdgeLabel::Inessential, std::move(witness[k])});
  }
  return ReebGraph(nodes.front().level, nodes.back().level, std::move(vertices), std::move(edges));
}

std::vector<std::pair<std::string, LevelCycle>> edge_cycles_at(const TriangulatedSurface& surface,
                                                               const ScalarField& field,
                                                               std::size_t slot) {
  if (slot + 1 >= field.size()) fail(ErrorCode::InvalidParams, "slot past the last vertex");
  std::vector<std::pair<std::string, LevelCycle>> out;
  ContourSweep sweep(surface, field);
  sweep.run([&](std::size_t r) {
    if (r != slot) return;
    std::vector<bool> done(surface.edge_count(), false);
    for (std::size_t e = 0; e < surface.edge_count(); ++e) {
      if (done[e] || !sweep.crossing(e, slot)) continue;
      std::vector<std::size_t> crossed;
      auto cycle = sweep.walk(e, slot, &crossed);
      for (auto c : crossed) done[c] = true;
      out.emplace_back(arc_id(sweep.label(e)), std::move(cycle));
    }
  });
  return out;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

bool has_edge(const Triangle& t, const MeshEdge& e) {
  const auto contains = [&](std::uint32_t v) { return std::find(t.begin(), t.end(), v) != t.end(); };
  return e[0] != e[1] && contains(e[0]) && contains(e[1]);
}

void check_cycle(const TriangulatedSurface& s, const ScalarField& f, const LevelCycle& c) {
  const auto& xs = c.crossings;
  if (xs.empty()) fail(ErrorCode::OpenCycle, "level loop has no crossings");
  std::set<std::uint32_t> triangles;
  std::set<MeshEdge> entries;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto& x = xs[i];
    if (x.triangle >= s.triangle_count()) fail(ErrorCode::OpenCycle, "crossing names a missing triangle");
    const auto& tri = s.triangles()[x.triangle];
    if (x.entry == x.exit || !has_edge(tri, x.entry) || !has_edge(tri, x.exit)) {
      fail(ErrorCode::OpenCycle, "crossing edges do not belong to triangle " + std::to_string(x.triangle));
    }
    if (!triangles.insert(x.triangle).second || !entries.insert(x.entry).second) {
      fail(ErrorCode::OpenCycle, "level loop is not simple");
    }
    const auto& next = xs[(i + 1) % xs.size()];
    if (x.exit != next.entry) fail(ErrorCode::OpenCycle, "level loop is not closed");
    const double a = f.value(x.entry[0]);
    const double b = f.value(x.entry[1]);
    if (!(std::min(a, b) <= c.level && c.level <= std::max(a, b))) {
      fail(ErrorCode::OpenCycle, "crossing does not meet the loop level");
    }
  }
}

}  // namespace

std::vector<CutComponent> cut_along(const TriangulatedSurface& surface, const ScalarField& field,
                                    const LevelCycle& cycle) {
  check_cycle(surface, field, cycle);

  std::vector<std::size_t> crossing_of(surface.triangle_count(), kNone);
  for (std::size_t i = 0; i < cycle.crossings.size(); ++i) {
    crossing_of[cycle.crossings[i].triangle] = i;
  }

  // Each crossed mesh edge splits into two cut points, one glued to each end.
  std::map<std::pair<MeshEdge, std::uint32_t>, std::uint32_t> cut_point;
  auto next_vertex = static_cast<std::uint32_t>(surface.vertex_count());
  auto point = [&](const MeshEdge& e, std::uint32_t end) {
    auto [it, inserted] = cut_point.try_emplace({e, end}, next_vertex);
    if (inserted) ++next_vertex;
    return it->second;
  };

  std::vector<Triangle> faces;
  for (std::size_t t = 0; t < surface.triangle_count(); ++t) {
    if (crossing_of[t] == kNone) {
      faces.push_back(surface.triangles()[t]);
      continue;
    }
    const auto& x = cycle.crossings[crossing_of[t]];
    const std::uint32_t lone =
        (x.entry[0] == x.exit[0] || x.entry[0] == x.exit[1]) ? x.entry[0] : x.entry[1];
    const std::uint32_t m = x.entry[0] == lone ? x.entry[1] : x.entry[0];
    const std::uint32_t n = x.exit[0] == lone ? x.exit[1] : x.exit[0];
    faces.push_back({lone, point(x.entry, lone), point(x.exit, lone)});
    faces.push_back({m, n, point(x.exit, n)});
    faces.push_back({m, point(x.exit, n), point(x.entry, m)});
  }

  const std::size_t nv = next_vertex;
  UnionFind pieces(nv);
  std::map<MeshEdge, int> edge_use;
  for (const auto& t : faces) {
    for (int k = 0; k < 3; ++k) {
      pieces.unite(t[k], t[(k + 1) % 3]);
      ++edge_use[make_edge(t[k], t[(k + 1) % 3])];
    }
  }
  UnionFind loops(nv);
  std::vector<bool> on_boundary(nv, false);
  for (const auto& [e, uses] : edge_use) {
    if (uses == 1) {
      loops.unite(e[0], e[1]);
      on_boundary[e[0]] = on_boundary[e[1]] = true;
    }
  }

  std::map<std::size_t, CutComponent> by_root;
  for (std::size_t v = 0; v < nv; ++v) by_root[pieces.find(v)].euler += 1;
  for (const auto& [e, uses] : edge_use) by_root[pieces.find(e[0])].euler -= 1;
  for (const auto& t : faces) by_root[pieces.find(t[0])].euler += 1;
  std::set<std::size_t> loop_roots;
  for (std::size_t v = 0; v < nv; ++v) {
    if (on_boundary[v] && loop_roots.insert(loops.find(v)).second) {
      by_root[pieces.find(v)].boundary_loops += 1;
    }
  }

  std::vector<CutComponent> out;
  for (const auto& [root, piece] : by_root) out.push_back(piece);
  return out;
}

EdgeLabel classify_essential(const TriangulatedSurface& surface, const ScalarField& field,
                             const LevelCycle& cycle) {
  const auto pieces = cut_along(surface, field, cycle);
  const bool disk = std::any_of(pieces.begin(), pieces.end(), [](const CutComponent& c) {
    return c.euler == 1 && c.boundary_loops == 1;
  });
  return disk ? EdgeLabel::Inessential : EdgeLabel::Essential;
}

ReebGraph label_reeb(const TriangulatedSurface& surface, const ScalarField& field,
                     const ReebGraph& graph) {
  std::vector<ReebEdge> edges(graph.edges().begin(), graph.edges().end());
  for (auto& e : edges) {
    if (!e.witness) fail(ErrorCode::MissingWitness, "edge '" + e.id + "' has no witness loop");
    e.label = classify_essential(surface, field, *e.witness);
  }
  return ReebGraph(graph.lo(), graph.hi(),
                   std::vector<ReebVertex>(graph.vertices().begin(), graph.vertices().end()),
                   std::move(edges));
}

}  // namespace reeb
