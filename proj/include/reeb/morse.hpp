#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "reeb/graph.hpp"
#include "reeb/surface.hpp"

namespace reeb {

enum class CriticalType { Regular, Minimum, Maximum, Saddle };

/// Lower-link rule: no lower neighbors is a minimum, no upper neighbors a
/// maximum, two lower arcs a saddle. Three or more arcs throw DegenerateField.
CriticalType classify_vertex(const TriangulatedSurface& surface, const ScalarField& field,
                             std::uint32_t vertex);

/// All level loops strictly between the vertices of rank `slot` and
/// `slot + 1`. The loop level is the midpoint of their values.
std::vector<LevelCycle> level_cycles(const TriangulatedSurface& surface, const ScalarField& field,
                                     std::size_t slot);

/// Reeb graph of the field by an upward sweep over the vertices that tracks
/// contour components. Vertices sit at their field values; the window is
/// [global minimum, global maximum]. Each edge carries a witness loop taken in
/// the vertex gap that holds the midpoint of its span. Edges come out labeled
/// inessential; label_reeb() fills in the labels.
ReebGraph build_reeb(const TriangulatedSurface& surface, const ScalarField& field);

/// For each Reeb edge alive at `slot`, the edge id and its loop there.
std::vector<std::pair<std::string, LevelCycle>> edge_cycles_at(const TriangulatedSurface& surface,
                                                               const ScalarField& field,
                                                               std::size_t slot);

struct CutComponent {
  int euler = 0;
  int boundary_loops = 0;
};

/// Cuts the surface along the loop, retriangulating crossed triangles, and
/// reports every piece. Throws OpenCycle for an invalid loop.
std::vector<CutComponent> cut_along(const TriangulatedSurface& surface, const ScalarField& field,
                                    const LevelCycle& cycle);

/// Inessential iff the loop bounds a disk: some cut piece has Euler
/// characteristic 1 and a single boundary loop.
EdgeLabel classify_essential(const TriangulatedSurface& surface, const ScalarField& field,
                             const LevelCycle& cycle);

/// Labels every edge from its witness loop. Throws MissingWitness.
ReebGraph label_reeb(const TriangulatedSurface& surface, const ScalarField& field,
                     const ReebGraph& graph);

}  // namespace reeb
