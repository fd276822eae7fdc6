#pragma once

#include <cstdint>

#include "reeb/assignment.hpp"
#include "reeb/graph.hpp"

namespace reeb {

inline constexpr std::uint32_t kMaxSaddles = 10'000;

struct GenParams {
  std::uint64_t seed = 0;
  std::uint32_t saddle_count = 0;
  double parallel_edge_bias = 0.2;
  double inessential_bias = 0.3;
};

/// Random window graph over [0, 1] built by a left-to-right sweep of strand
/// births, splits, merges and deaths. Only the saddle label patterns
/// E>EE, I>EE, E>EI, I>II and their mirror images are emitted, centers only
/// touch inessential strands, and at least one essential strand is alive at
/// every level. Deterministic in the seed.
ReebGraph random_reeb(const GenParams& params);

/// Reference assignment written for clarity, not speed. Every round rescans
/// all edges, visits vertices in an order shuffled by `scan_seed`, and
/// rebuilds the frontier from the raw levels. Returns values only; the trace
/// is left empty.
PartialAssignment naive_assign(const EssentialSubgraph& g, std::uint64_t scan_seed = 0);

}  // namespace reeb
