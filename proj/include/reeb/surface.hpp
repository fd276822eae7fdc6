#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace reeb {

using Point3 = std::array<double, 3>;
using Triangle = std::array<std::uint32_t, 3>;
/// Undirected mesh edge, smaller index first.
using MeshEdge = std::array<std::uint32_t, 2>;

inline MeshEdge make_edge(std::uint32_t a, std::uint32_t b) {
  return a < b ? MeshEdge{a, b} : MeshEdge{b, a};
}

/// Closed, connected, orientable triangulated surface. The constructor
/// rejects anything else with NotAManifold or NotOrientable.
class TriangulatedSurface {
 public:
  TriangulatedSurface(std::vector<Point3> positions, std::vector<Triangle> triangles);

  std::size_t vertex_count() const noexcept { return positions_.size(); }
  std::size_t triangle_count() const noexcept { return triangles_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Point3> positions() const noexcept { return positions_; }
  std::span<const Triangle> triangles() const noexcept { return triangles_; }
  std::span<const MeshEdge> edges() const noexcept { return edges_; }

  std::optional<std::size_t> find_edge(std::uint32_t a, std::uint32_t b) const;
  /// The two triangles on either side of an edge.
  const std::array<std::uint32_t, 2>& edge_triangles(std::size_t edge) const noexcept {
    return edge_triangles_[edge];
  }
  /// Edge indices of a triangle: (v0 v1), (v1 v2), (v2 v0).
  const std::array<std::size_t, 3>& triangle_edges(std::size_t triangle) const noexcept {
    return triangle_edges_[triangle];
  }
  /// Neighbors of a vertex in cyclic order around it.
  std::span<const std::uint32_t> link(std::uint32_t vertex) const noexcept {
    return links_[vertex];
  }

  int euler_characteristic() const noexcept {
    return static_cast<int>(vertex_count()) - static_cast<int>(edge_count()) +
           static_cast<int>(triangle_count());
  }
  int genus() const noexcept { return (2 - euler_characteristic()) / 2; }

 private:
  std::vector<Point3> positions_;
  std::vector<Triangle> triangles_;
  std::vector<MeshEdge> edges_;
  std::vector<std::array<std::uint32_t, 2>> edge_triangles_;
  std::vector<std::array<std::size_t, 3>> triangle_edges_;
  std::vector<std::vector<std::uint32_t>> links_;
  std::unordered_map<std::uint64_t, std::size_t> edge_index_;
};

/// Per-vertex values with ties broken by vertex index, so every pair of
/// vertices is strictly ordered.
class ScalarField {
 public:
  ScalarField(const TriangulatedSurface& surface, std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  double value(std::uint32_t vertex) const noexcept { return values_[vertex]; }
  std::size_t rank(std::uint32_t vertex) const noexcept { return rank_[vertex]; }
  std::uint32_t at_rank(std::size_t rank) const noexcept { return order_[rank]; }
  bool below(std::uint32_t a, std::uint32_t b) const noexcept { return rank_[a] < rank_[b]; }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  std::vector<double> values_;
  std::vector<std::size_t> rank_;
  std::vector<std::uint32_t> order_;
};

/// OFF reader. Polygons with more than three corners are fan-triangulated.
TriangulatedSurface read_off(std::istream& in);
void write_off(std::ostream& out, const TriangulatedSurface& surface);

/// Whitespace-separated values, one per vertex.
std::vector<double> read_scalars(std::istream& in);
void write_scalars(std::ostream& out, std::span<const double> values);

}  // namespace reeb
