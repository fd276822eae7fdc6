#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "reeb/graph.hpp"

namespace reeb {

enum class Step { Step0, Step1, Step2 };

std::string_view to_string(Step step);

struct TraceEntry {
  Step step = Step::Step0;
  std::optional<std::size_t> vertex;  // index into the subgraph
  std::vector<std::size_t> edges;     // edge indices assigned by this entry
  std::uint32_t value = 0;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

/// Integers on the edges of an essential subgraph, indexed like its edges.
/// Zero means unassigned.
class PartialAssignment {
 public:
  explicit PartialAssignment(std::size_t edge_count) : values_(edge_count, 0) {}

  std::size_t size() const noexcept { return values_.size(); }
  bool assigned(std::size_t edge) const noexcept { return values_[edge] != 0; }
  std::optional<std::uint32_t> at(std::size_t edge) const {
    if (values_[edge] == 0) return std::nullopt;
    return values_[edge];
  }
  std::span<const std::uint32_t> values() const noexcept { return values_; }

  std::size_t assigned_count() const noexcept;
  bool complete() const noexcept { return assigned_count() == values_.size(); }

  /// Sets an edge and records nothing in the trace; used to build fixtures.
  void set(std::size_t edge, std::uint32_t value) { values_[edge] = value; }

  /// Sets every edge in `edges` to `value` and appends one trace entry.
  void record(Step step, std::optional<std::size_t> vertex,
              std::vector<std::size_t> edges, std::uint32_t value);

  std::span<const TraceEntry> trace() const noexcept { return trace_; }

  friend bool operator==(const PartialAssignment&, const PartialAssignment&) = default;

 private:
  std::vector<std::uint32_t> values_;
  std::vector<TraceEntry> trace_;
};

/// Integers seen just below a vertex: either {n} or {n-1, n}.
struct FrontierClass {
  enum class Kind { AllEqual, Consecutive };
  Kind kind = Kind::AllEqual;
  std::uint32_t n = 1;

  /// The integer Step 2 gives to the unassigned edges at the vertex.
  std::uint32_t next_value() const noexcept { return kind == Kind::AllEqual ? n + 1 : n; }

  friend bool operator==(const FrontierClass&, const FrontierClass&) = default;
};

/// Classifies a multiset of positive integers. Throws EmptyFrontier or
/// NonConsecutiveFrontier.
FrontierClass classify_values(std::span<const std::uint32_t> values);

/// Edges adjacent to the lower boundary get 1.
PartialAssignment step0(const EssentialSubgraph& g);

/// Copies integers across valency-2 vertices until nothing changes. The rule
/// fires whichever sides of the vertex the two edges leave from.
PartialAssignment step1_saturate(const EssentialSubgraph& g, PartialAssignment p);

/// Classifies the assigned integers on edges crossing the level just below
/// `vertex`.
FrontierClass classify_frontier(const EssentialSubgraph& g, const PartialAssignment& p,
                                std::size_t vertex);

/// Lowest interior vertex with an unassigned incident edge, if any.
std::optional<std::size_t> next_vertex(const EssentialSubgraph& g, const PartialAssignment& p);

/// Assigns the next integer at the lowest vertex that still has unassigned
/// edges.
PartialAssignment step2(const EssentialSubgraph& g, PartialAssignment p);

/// Runs Step 0 and then alternates Step 1 saturation with Step 2 until every
/// edge carries an integer. With `check`, the invariants are recomputed after
/// each saturation and a failure throws InvariantViolation.
PartialAssignment assign_all(const EssentialSubgraph& g, bool check = false);

namespace rule {
inline constexpr std::string_view kSingleAssignment = "SingleAssignment";
inline constexpr std::string_view kLowerAnchor = "LowerAnchor";
inline constexpr std::string_view kUniqueness = "Uniqueness";
inline constexpr std::string_view kFrontier = "(*)'";
inline constexpr std::string_view kRightBand = "(**)'";
}  // namespace rule

/// Recomputes the sweep invariants from scratch for a saturated assignment
/// whose next Step 2 target is `vertex` (none once complete).
ValidationReport check_invariants(const EssentialSubgraph& g, const PartialAssignment& p,
                                  std::optional<std::size_t> vertex);

struct DistanceBoundReport {
  std::vector<std::pair<std::size_t, std::uint32_t>> per_boundary_edge;
  std::uint32_t n_min = 0;
  std::uint32_t bound = 0;
};

/// Minimum integer over edges at the upper boundary, plus one.
DistanceBoundReport distance_bound(const EssentialSubgraph& g, const PartialAssignment& p);

}  // namespace reeb
