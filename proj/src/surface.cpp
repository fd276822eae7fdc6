#include "reeb/surface.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>

#include "reeb/error.hpp"

namespace reeb {

namespace {

std::uint64_t edge_key(std::uint32_t a, std::uint32_t b) {
  const auto e = make_edge(a, b);
  return (static_cast<std::uint64_t>(e[0]) << 32) | e[1];
}

// +1 if the triangle runs a -> b, -1 if b -> a.
int direction(const Triangle& t, std::uint32_t a, std::uint32_t b) {
  for (int k = 0; k < 3; ++k) {
    if (t[k] == a) return t[(k + 1) % 3] == b ? 1 : -1;
  }
  return 0;
}

}  // namespace

TriangulatedSurface::TriangulatedSurface(std::vector<Point3> positions,
                                         std::vector<Triangle> triangles)
    : positions_(std::move(positions)), triangles_(std::move(triangles)) {
  const std::size_t nv = positions_.size();
  if (triangles_.empty()) fail(ErrorCode::NotAManifold, "surface has no triangles");

  std::set<Triangle> seen;
  auto& edge_index = edge_index_;
  std::vector<std::uint32_t> edge_uses;
  triangle_edges_.resize(triangles_.size());
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    const auto& tri = triangles_[t];
    for (auto v : tri) {
      if (v >= nv) fail(ErrorCode::NotAManifold, "triangle " + std::to_string(t) + " indexes past the vertex list");
    }
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) {
      fail(ErrorCode::NotAManifold, "triangle " + std::to_string(t) + " repeats a vertex");
    }
    Triangle sorted = tri;
    std::sort(sorted.begin(), sorted.end());
    if (!seen.insert(sorted).second) {
      fail(ErrorCode::NotAManifold, "triangle " + std::to_string(t) + " is duplicated");
    }
    for (int k = 0; k < 3; ++k) {
      const auto a = tri[k];
      const auto b = tri[(k + 1) % 3];
      auto [it, inserted] = edge_index.emplace(edge_key(a, b), edges_.size());
      if (inserted) {
        edges_.push_back(make_edge(a, b));
        edge_triangles_.push_back({static_cast<std::uint32_t>(t), 0});
        edge_uses.push_back(1);
      } else {
        if (edge_uses[it->second] >= 2) {
          fail(ErrorCode::NotAManifold, "edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                            ") borders more than two triangles");
        }
        edge_triangles_[it->second][1] = static_cast<std::uint32_t>(t);
        ++edge_uses[it->second];
      }
      triangle_edges_[t][k] = it->second;
    }
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edge_uses[e] != 2) {
      fail(ErrorCode::NotAManifold, "edge (" + std::to_string(edges_[e][0]) + ", " +
                                        std::to_string(edges_[e][1]) + ") is a boundary edge");
    }
  }

  // Vertex links must be single cycles.
  std::vector<std::vector<std::array<std::uint32_t, 2>>> link_edges(nv);
  for (const auto& tri : triangles_) {
    for (int k = 0; k < 3; ++k) {
      link_edges[tri[k]].push_back({tri[(k + 1) % 3], tri[(k + 2) % 3]});
    }
  }
  links_.resize(nv);
  for (std::uint32_t v = 0; v < nv; ++v) {
    const auto& star = link_edges[v];
    if (star.empty()) fail(ErrorCode::NotAManifold, "vertex " + std::to_string(v) + " is not used");
    std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> adjacent;
    for (const auto& [a, b] : star) {
      adjacent[a].push_back(b);
      adjacent[b].push_back(a);
    }
    auto& ring = links_[v];
    std::uint32_t previous = star.front()[0];
    std::uint32_t current = star.front()[1];
    ring.push_back(previous);
    while (current != ring.front()) {
      ring.push_back(current);
      const auto& next = adjacent[current];
      const std::uint32_t step = next[0] == previous ? next[1] : next[0];
      previous = current;
      current = step;
      if (ring.size() > star.size()) break;
    }
    if (ring.size() != star.size() || ring.size() != adjacent.size()) {
      fail(ErrorCode::NotAManifold, "link of vertex " + std::to_string(v) + " is not a single cycle");
    }
  }

  // Connectivity and orientability in one traversal.
  std::vector<int> sign(triangles_.size(), 0);
  std::vector<std::size_t> stack{0};
  sign[0] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const auto t = stack.back();
    stack.pop_back();
    ++reached;
    for (int k = 0; k < 3; ++k) {
      const auto e = triangle_edges_[t][k];
      const auto& pair = edge_triangles_[e];
      const auto other = pair[0] == t ? pair[1] : pair[0];
      const auto [a, b] = edges_[e];
      const int wanted = -sign[t] * direction(triangles_[t], a, b) * direction(triangles_[other], a, b);
      if (sign[other] == 0) {
        sign[other] = wanted;
        stack.push_back(other);
      } else if (sign[other] != wanted) {
        fail(ErrorCode::NotOrientable, "triangles admit no consistent orientation");
      }
    }
  }
  if (reached != triangles_.size()) fail(ErrorCode::NotAManifold, "surface is disconnected");
}

std::optional<std::size_t> TriangulatedSurface::find_edge(std::uint32_t a, std::uint32_t b) const {
  auto it = edge_index_.find(edge_key(a, b));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

ScalarField::ScalarField(const TriangulatedSurface& surface, std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.size() != surface.vertex_count()) {
    fail(ErrorCode::DegenerateField, "field has " + std::to_string(values_.size()) +
                                         " values for " + std::to_string(surface.vertex_count()) +
                                         " vertices");
  }
  for (std::size_t v = 0; v < values_.size(); ++v) {
    if (!std::isfinite(values_[v])) {
      fail(ErrorCode::DegenerateField, "value of vertex " + std::to_string(v) + " is not finite");
    }
  }
  order_.resize(values_.size());
  std::iota(order_.begin(), order_.end(), std::uint32_t{0});
  std::sort(order_.begin(), order_.end(), [&](auto a, auto b) {
    return values_[a] < values_[b] || (values_[a] == values_[b] && a < b);
  });
  rank_.resize(values_.size());
  for (std::size_t r = 0; r < order_.size(); ++r) rank_[order_[r]] = r;
}

namespace {

std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  return lines;
}

}  // namespace

TriangulatedSurface read_off(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.empty()) fail(ErrorCode::ParseError, "empty OFF input");
  std::istringstream header(lines[0]);
  std::string magic;
  header >> magic;
  if (magic != "OFF") fail(ErrorCode::ParseError, "missing OFF header");

  std::size_t next = 1;
  long long nv = -1, nf = -1, ne = 0;
  if (!(header >> nv >> nf)) {
    if (lines.size() < 2) fail(ErrorCode::ParseError, "missing OFF counts");
    std::istringstream counts(lines[next++]);
    if (!(counts >> nv >> nf)) fail(ErrorCode::ParseError, "bad OFF counts");
    counts >> ne;
  }
  if (nv < 0 || nf < 0) fail(ErrorCode::ParseError, "negative OFF counts");
  if (lines.size() < next + static_cast<std::size_t>(nv + nf)) {
    fail(ErrorCode::ParseError, "OFF file is truncated");
  }

  std::vector<Point3> positions;
  positions.reserve(static_cast<std::size_t>(nv));
  for (long long i = 0; i < nv; ++i) {
    std::istringstream row(lines[next++]);
    Point3 p{};
    if (!(row >> p[0] >> p[1] >> p[2])) fail(ErrorCode::ParseError, "bad OFF vertex line " + std::to_string(i));
    positions.push_back(p);
  }
  std::vector<Triangle> triangles;
  for (long long i = 0; i < nf; ++i) {
    std::istringstream row(lines[next++]);
    long long n = 0;
    if (!(row >> n) || n < 3) fail(ErrorCode::ParseError, "bad OFF face line " + std::to_string(i));
    std::vector<std::uint32_t> corners;
    for (long long k = 0; k < n; ++k) {
      long long idx = -1;
      if (!(row >> idx) || idx < 0 || idx >= nv) {
        fail(ErrorCode::ParseError, "bad index in OFF face " + std::to_string(i));
      }
      corners.push_back(static_cast<std::uint32_t>(idx));
    }
    for (std::size_t k = 1; k + 1 < corners.size(); ++k) {
      triangles.push_back({corners[0], corners[k], corners[k + 1]});
    }
  }
  return TriangulatedSurface(std::move(positions), std::move(triangles));
}

void write_off(std::ostream& out, const TriangulatedSurface& surface) {
  out << "OFF\n" << surface.vertex_count() << ' ' << surface.triangle_count() << ' '
      << surface.edge_count() << '\n';
  out.precision(17);
  for (const auto& p : surface.positions()) out << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
  for (const auto& t : surface.triangles()) out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

std::vector<double> read_scalars(std::istream& in) {
  std::vector<double> values;
  for (const auto& line : content_lines(in)) {
    std::istringstream row(line);
    std::string token;
    while (row >> token) {
      std::size_t used = 0;
      double value = 0.0;
      try {
        value = std::stod(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) fail(ErrorCode::ParseError, "bad scalar value '" + token + "'");
      values.push_back(value);
    }
  }
  return values;
}

void write_scalars(std::ostream& out, std::span<const double> values) {
  out.precision(17);
  for (double v : values) out << v << '\n';
}

}  // namespace reeb
