#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace reeb::fixtures {

namespace {

constexpr auto E = EdgeLabel::Essential;
constexpr auto I = EdgeLabel::Inessential;
constexpr auto Minus = VertexKind::BoundaryMinus;
constexpr auto Plus = VertexKind::BoundaryPlus;
constexpr auto Center = VertexKind::Center;
constexpr auto Saddle = VertexKind::Saddle;

ReebEdge edge(std::string id, std::string lower, std::string upper, EdgeLabel label = E) {
  return {std::move(id), std::move(lower), std::move(upper), label, std::nullopt};
}

}  // namespace

ReebGraph single_edge() {
  return ReebGraph(0.1, 0.9, {{"m0", 0.1, Minus}, {"p0", 0.9, Plus}}, {edge("e0", "m0", "p0")});
}

ReebGraph y_graph() {
  return ReebGraph(0.0, 1.0,
                   {{"m0", 0.0, Minus}, {"v", 0.5, Saddle}, {"p1", 1.0, Plus}, {"p2", 1.0, Plus}},
                   {edge("e0", "m0", "v"), edge("e1", "v", "p1"), edge("e2", "v", "p2")});
}

ReebGraph theta_graph() {
  return ReebGraph(0.0, 1.0,
                   {{"m_a", 0.0, Minus},
                    {"m_b", 0.0, Minus},
                    {"v1", 0.3, Saddle},
                    {"v2", 0.7, Saddle},
                    {"p_a", 1.0, Plus},
                    {"p_e", 1.0, Plus}},
                   {edge("e_a", "m_a", "p_a"), edge("e_b", "m_b", "v1"), edge("e_c", "v1", "v2"),
                    edge("e_d", "v1", "v2"), edge("e_e", "v2", "p_e")});
}

ReebGraph parity_violation() {
  return ReebGraph(0.0, 1.0,
                   {{"m0", 0.0, Minus},
                    {"m1", 0.0, Minus},
                    {"v", 0.5, Saddle},
                    {"c1", 0.7, Center},
                    {"c2", 0.8, Center},
                    {"p1", 1.0, Plus}},
                   {edge("e0", "m0", "v"), edge("e1", "v", "c1", I), edge("e2", "v", "c2", I),
                    edge("e3", "m1", "p1")});
}

ReebGraph coverage_violation() {
  return ReebGraph(0.1, 0.9,
                   {{"m0", 0.1, Minus}, {"m1", 0.1, Minus}, {"v", 0.4, Saddle}, {"p0", 0.9, Plus}},
                   {edge("e0", "m0", "v"), edge("e1", "m1", "v"), edge("e2", "v", "p0", I)});
}

ReebGraph center_violation() {
  return ReebGraph(0.0, 1.0,
                   {{"m0", 0.0, Minus}, {"c1", 0.3, Center}, {"c2", 0.6, Center}, {"p0", 1.0, Plus}},
                   {edge("e0", "m0", "p0"), edge("e1", "c1", "c2")});
}

ReebGraph genericity_violation() {
  return ReebGraph(0.0, 1.0,
                   {{"m0", 0.0, Minus},
                    {"m1", 0.0, Minus},
                    {"v0", 0.5, Saddle},
                    {"v1", 0.5, Saddle},
                    {"p0", 1.0, Plus},
                    {"p1", 1.0, Plus},
                    {"p2", 1.0, Plus},
                    {"p3", 1.0, Plus}},
                   {edge("e0", "m0", "v0"), edge("e1", "v0", "p0"), edge("e2", "v0", "p1"),
                    edge("e3", "m1", "v1"), edge("e4", "v1", "p2"), edge("e5", "v1", "p3")});
}

MeshFixture sphere() {
  std::vector<Point3> p{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  std::vector<Triangle> t{{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
                          {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}};
  std::vector<double> f;
  for (const auto& q : p) f.push_back(q[2] + 0.1 * q[0] + 0.01 * q[1]);
  return {"sphere", 0, TriangulatedSurface(p, t), f};
}

MeshFixture torus() {
  auto m = stacked_tori(1);
  m.name = "torus";
  return m;
}

namespace {

constexpr int kAround = 40;  // samples along the core circle; divisible by 4
constexpr int kTube = 24;    // samples around the tube; even
constexpr double kR = 3.0;
constexpr double kr = 2.0;
constexpr double kStack = 11.0;
constexpr int kNeckRings = 3;

// Ring of `v` in the orientation of the triangles around it.
std::vector<std::uint32_t> oriented_link(const std::vector<Triangle>& tris, std::uint32_t v) {
  std::map<std::uint32_t, std::uint32_t> next;
  for (const auto& t : tris) {
    for (int k = 0; k < 3; ++k) {
      if (t[k] == v) next[t[(k + 1) % 3]] = t[(k + 2) % 3];
    }
  }
  std::vector<std::uint32_t> ring{next.begin()->first};
  while (ring.size() < next.size()) ring.push_back(next.at(ring.back()));
  return ring;
}

}  // namespace

MeshFixture stacked_tori(int genus) {
  if (genus < 1) throw std::invalid_argument("stacked_tori needs genus >= 1");
  std::vector<Point3> p;
  std::vector<Triangle> t;
  const double tau = 2 * std::numbers::pi;
  auto index = [](int k, int i, int j) {
    return static_cast<std::uint32_t>(k * kAround * kTube + ((i + kAround) % kAround) * kTube +
                                      ((j + kTube) % kTube));
  };
  for (int k = 0; k < genus; ++k) {
    for (int i = 0; i < kAround; ++i) {
      const double theta = tau * i / kAround;
      for (int j = 0; j < kTube; ++j) {
        const double phi = tau * j / kTube;
        const double w = kR + kr * std::cos(phi);
        p.push_back({w * std::cos(theta), kr * std::sin(phi), w * std::sin(theta) + kStack * k});
      }
    }
    for (int i = 0; i < kAround; ++i) {
      for (int j = 0; j < kTube; ++j) {
        const auto a = index(k, i, j), b = index(k, i + 1, j), c = index(k, i + 1, j + 1),
                   d = index(k, i, j + 1);
        t.push_back({a, b, c});
        t.push_back({a, c, d});
      }
    }
  }

  // Necks: drop the top vertex of torus k and the bottom vertex of torus k+1
  // and join the two hexagonal holes.
  for (int k = 0; k + 1 < genus; ++k) {
    const auto top = index(k, kAround / 4, 0);
    const auto bottom = index(k + 1, 3 * kAround / 4, 0);
    const auto lower = oriented_link(t, top);
    const auto upper = oriented_link(t, bottom);
    std::erase_if(t, [&](const Triangle& tri) {
      return std::find(tri.begin(), tri.end(), top) != tri.end() ||
             std::find(tri.begin(), tri.end(), bottom) != tri.end();
    });
    const int n = static_cast<int>(lower.size());
    // The far ring runs against `upper`; rotate it to sit above `lower`.
    int best_shift = 0;
    double best = std::numeric_limits<double>::infinity();
    for (int s = 0; s < n; ++s) {
      double cost = 0;
      for (int q = 0; q < n; ++q) {
        const auto& a = p[lower[q]];
        const auto& b = p[upper[((s - q) % n + n) % n]];
        cost += std::hypot(a[0] - b[0], a[1] - b[1]);
      }
      if (cost < best) best = cost, best_shift = s;
    }
    std::vector<std::vector<std::uint32_t>> rings{lower};
    for (int r = 1; r <= kNeckRings; ++r) {
      const double u = static_cast<double>(r) / (kNeckRings + 1);
      std::vector<std::uint32_t> ring;
      for (int q = 0; q < n; ++q) {
        const auto& a = p[lower[q]];
        const auto& b = p[upper[((best_shift - q) % n + n) % n]];
        ring.push_back(static_cast<std::uint32_t>(p.size()));
        p.push_back({a[0] + u * (b[0] - a[0]), a[1] + u * (b[1] - a[1]), a[2] + u * (b[2] - a[2])});
      }
      rings.push_back(ring);
    }
    std::vector<std::uint32_t> far;
    for (int q = 0; q < n; ++q) far.push_back(upper[((best_shift - q) % n + n) % n]);
    rings.push_back(far);
    for (std::size_t r = 0; r + 1 < rings.size(); ++r) {
      for (int q = 0; q < n; ++q) {
        const auto a = rings[r][q], b = rings[r][(q + 1) % n];
        const auto c = rings[r + 1][(q + 1) % n], d = rings[r + 1][q];
        t.push_back({a, b, c});
        t.push_back({a, c, d});
      }
    }
  }

  // Compact away the removed vertices.
  std::vector<std::uint32_t> remap(p.size(), UINT32_MAX);
  for (const auto& tri : t) {
    for (auto v : tri) remap[v] = 0;
  }
  std::vector<Point3> kept;
  for (std::size_t v = 0; v < p.size(); ++v) {
    if (remap[v] == 0) {
      remap[v] = static_cast<std::uint32_t>(kept.size());
      kept.push_back(p[v]);
    }
  }
  for (auto& tri : t) {
    for (auto& v : tri) v = remap[v];
  }

  const double z0 = -(kR + kr);
  const double z1 = kR + kr + kStack * (genus - 1);
  std::vector<double> f;
  for (const auto& q : kept) f.push_back((q[2] - z0) / (z1 - z0));
  return {"genus" + std::to_string(genus), genus, TriangulatedSurface(std::move(kept), std::move(t)),
          std::move(f)};
}

int euler_characteristic(const TriangulatedSurface& s) {
  return static_cast<int>(s.vertex_count()) - static_cast<int>(s.edge_count()) +
         static_cast<int>(s.triangle_count());
}

bool bounds_disk(const TriangulatedSurface& s, const LevelCycle& cycle) {
  std::set<std::array<std::uint32_t, 2>> cut_edges;
  std::set<std::uint32_t> cut_triangles;
  for (const auto& c : cycle.crossings) {
    cut_edges.insert(c.entry);
    cut_edges.insert(c.exit);
    cut_triangles.insert(c.triangle);
  }

  std::vector<std::uint32_t> parent(s.vertex_count());
  std::iota(parent.begin(), parent.end(), 0u);
  auto root = [&](std::uint32_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<std::array<std::uint32_t, 2>> kept_edges;
  for (const auto& tri : s.triangles()) {
    for (int k = 0; k < 3; ++k) {
      const auto e = make_edge(tri[k], tri[(k + 1) % 3]);
      if (!cut_edges.contains(e)) kept_edges.push_back(e);
    }
  }
  std::sort(kept_edges.begin(), kept_edges.end());
  kept_edges.erase(std::unique(kept_edges.begin(), kept_edges.end()), kept_edges.end());
  for (const auto& [a, b] : kept_edges) parent[root(a)] = root(b);

  std::map<std::uint32_t, int> chi;
  for (std::uint32_t v = 0; v < s.vertex_count(); ++v) ++chi[root(v)];
  for (const auto& [a, b] : kept_edges) --chi[root(a)];
  for (std::uint32_t t = 0; t < s.triangle_count(); ++t) {
    if (!cut_triangles.contains(t)) ++chi[root(s.triangles()[t][0])];
  }
  if (chi.size() != 2) return false;
  return std::any_of(chi.begin(), chi.end(), [](const auto& kv) { return kv.second == 1; });
}

}  // namespace reeb::fixtures
