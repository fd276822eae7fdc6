#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace reeb {

/// Sweep parameter. Comparisons in the graph code are exact.
using Level = double;

enum class VertexKind { BoundaryMinus, BoundaryPlus, Center, Saddle, Regular };
enum class EdgeLabel { Essential, Inessential };

std::string_view to_string(VertexKind kind);
std::string_view to_string(EdgeLabel label);
std::optional<VertexKind> parse_vertex_kind(std::string_view text);
std::optional<EdgeLabel> parse_edge_label(std::string_view text);

bool is_boundary(VertexKind kind);

/// One triangle traversed by a level loop. Mesh edges are stored as
/// (smaller vertex index, larger vertex index).
struct CycleCrossing {
  std::uint32_t triangle = 0;
  std::array<std::uint32_t, 2> entry{};
  std::array<std::uint32_t, 2> exit{};

  friend bool operator==(const CycleCrossing&, const CycleCrossing&) = default;
};

/// A closed level loop on a triangulated surface; the representative
/// curve of a Reeb edge built from a mesh.
struct LevelCycle {
  Level level = 0.0;
  std::vector<CycleCrossing> crossings;

  friend bool operator==(const LevelCycle&, const LevelCycle&) = default;
};

struct ReebVertex {
  std::string id;
  Level level = 0.0;
  VertexKind kind = VertexKind::Regular;

  friend bool operator==(const ReebVertex&, const ReebVertex&) = default;
};

struct ReebEdge {
  std::string id;
  std::string lower;
  std::string upper;
  EdgeLabel label = EdgeLabel::Essential;
  std::optional<LevelCycle> witness;

  friend bool operator==(const ReebEdge&, const ReebEdge&) = default;
};

/// Labeled Reeb graph over the level window [lo, hi].
///
/// Construction only checks that the graph is well formed (unique ids,
/// endpoints resolve, finite levels). The topological rules live in
/// validate().
class ReebGraph {
 public:
  ReebGraph(Level lo, Level hi, std::vector<ReebVertex> vertices,
            std::vector<ReebEdge> edges);

  Level lo() const noexcept { return lo_; }
  Level hi() const noexcept { return hi_; }

  std::span<const ReebVertex> vertices() const noexcept { return vertices_; }
  std::span<const ReebEdge> edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::optional<std::size_t> find_vertex(std::string_view id) const;
  std::optional<std::size_t> find_edge(std::string_view id) const;

  std::size_t lower_of(std::size_t edge) const noexcept { return ends_[edge][0]; }
  std::size_t upper_of(std::size_t edge) const noexcept { return ends_[edge][1]; }
  Level lower_level(std::size_t edge) const noexcept {
    return vertices_[ends_[edge][0]].level;
  }
  Level upper_level(std::size_t edge) const noexcept {
    return vertices_[ends_[edge][1]].level;
  }

  /// Edge indices incident to a vertex, in edge order.
  std::span<const std::size_t> incident(std::size_t vertex) const noexcept {
    return incident_[vertex];
  }

  friend bool operator==(const ReebGraph& a, const ReebGraph& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.vertices_ == b.vertices_ &&
           a.edges_ == b.edges_;
  }

 private:
  Level lo_;
  Level hi_;
  std::vector<ReebVertex> vertices_;
  std::vector<ReebEdge> edges_;
  std::unordered_map<std::string, std::size_t> vertex_by_id_;
  std::unordered_map<std::string, std::size_t> edge_by_id_;
  std::vector<std::array<std::size_t, 2>> ends_;
  std::vector<std::vector<std::size_t>> incident_;
};

/// Equality up to the order in which vertices and edges are listed.
bool equivalent(const ReebGraph& a, const ReebGraph& b);

// Rule identifiers reported by validate().
namespace rule {
inline constexpr std::string_view kValency = "Valency";
inline constexpr std::string_view kRegularVertex = "RegularVertex";
inline constexpr std::string_view kBoundaryLevel = "BoundaryLevel";
inline constexpr std::string_view kGenericity = "Genericity";
inline constexpr std::string_view kMonotone = "Monotone";
inline constexpr std::string_view kSaddleShape = "SaddleShape";
inline constexpr std::string_view kSaddleParity = "SaddleParity";
inline constexpr std::string_view kCenterRule = "CenterRule";
inline constexpr std::string_view kLevelCoverage = "LevelCoverage";
}  // namespace rule

struct Violation {
  std::string rule;
  std::vector<std::string> ids;
  std::string note;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(std::string_view rule_id) const;
};

struct ValidateOptions {
  /// Accept valency-2 subdivision vertices.
  bool allow_regular = false;
};

/// Checks every structural rule of a labeled Reeb graph:
///  - vertex valency matches its kind (Regular flagged unless allowed),
///  - boundary vertices sit at lo/hi and everything else inside,
///  - interior levels are pairwise distinct,
///  - edges strictly increase in level,
///  - saddles join one side to two on the other,
///  - a saddle never has exactly one essential branch,
///  - center edges are inessential,
///  - every inter-event level interval is crossed by an essential edge
///    (only for window graphs, i.e. graphs that carry boundary vertices).
ValidationReport validate(const ReebGraph& graph, const ValidateOptions& options = {});

/// Cuts the graph to the window [lo, hi] and installs boundary vertices at
/// the cut points. A cut vertex is named "<edge id>@lo" or "<edge id>@hi".
ReebGraph restrict_window(const ReebGraph& graph, Level lo, Level hi);

/// Distinct sorted levels of all vertices, together with lo and hi.
std::vector<Level> event_levels(const ReebGraph& graph);

/// The subgraph of essential edges with boundary and interior bookkeeping.
class EssentialSubgraph {
 public:
  /// Every edge of `graph` must be essential.
  explicit EssentialSubgraph(ReebGraph graph);

  const ReebGraph& graph() const noexcept { return graph_; }
  std::size_t valency(std::size_t vertex) const noexcept {
    return graph_.incident(vertex).size();
  }

  std::span<const std::size_t> boundary_minus() const noexcept { return boundary_minus_; }
  std::span<const std::size_t> boundary_plus() const noexcept { return boundary_plus_; }
  /// Non-boundary vertices, strictly increasing in level.
  std::span<const std::size_t> interior() const noexcept { return interior_; }

  /// Vertex levels plus lo, sorted and deduplicated.
  std::span<const Level> events() const noexcept { return events_; }

  /// A level just below `vertex`: the midpoint of the event gap that ends at
  /// the vertex level.
  Level probe_before(std::size_t vertex) const;

  /// True iff the open level span of the edge contains `level`.
  bool spans(std::size_t edge, Level level) const noexcept {
    return graph_.lower_level(edge) < level && level < graph_.upper_level(edge);
  }

 private:
  ReebGraph graph_;
  std::vector<std::size_t> boundary_minus_;
  std::vector<std::size_t> boundary_plus_;
  std::vector<std::size_t> interior_;
  std::vector<Level> events_;
};

/// Keeps the essential edges of a valid graph and the vertices they touch.
/// Throws InvalidGraph when validate() reports violations.
EssentialSubgraph essential_subgraph(const ReebGraph& graph,
                                     const ValidateOptions& options = {});

}  // namespace reeb
