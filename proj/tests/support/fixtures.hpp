#pragma once

#include <string>
#include <vector>

#include "reeb/graph.hpp"
#include "reeb/surface.hpp"

namespace reeb::fixtures {

// Window graphs. Every edge is essential unless stated.

/// m0 (0.1) -e0-> p0 (0.9).
ReebGraph single_edge();
/// m0 (0) -e0-> v (0.5), which splits into e1 -> p1 and e2 -> p2 (1).
ReebGraph y_graph();
/// e_a runs m_a -> p_a across the window; e_b runs m_b -> v1 (0.3); v1
/// splits into e_c and e_d, which merge at v2 (0.7) into e_e -> p_e.
ReebGraph theta_graph();

// One broken rule each; no other rule fires.

/// A saddle with one essential and two inessential branches.
ReebGraph parity_violation();
/// Above the only saddle nothing essential survives.
ReebGraph coverage_violation();
/// A center edge labeled essential.
ReebGraph center_violation();
/// Two saddles at one level.
ReebGraph genericity_violation();

// Surfaces with a height-like field.

struct MeshFixture {
  std::string name;
  int genus = 0;
  TriangulatedSurface surface;
  std::vector<double> field;
};

/// Octahedron, f = z + 0.1 x + 0.01 y.
MeshFixture sphere();
/// Torus standing on its rim, R = 3, r = 2, f = z rescaled to [0, 1], so the
/// saddles land at 0.4 and 0.6.
MeshFixture torus();
/// `genus` tori stacked along z, each joined to the next by a short tube
/// through the top of the lower and the bottom of the upper one.
MeshFixture stacked_tori(int genus);

int euler_characteristic(const TriangulatedSurface& surface);

/// Independent disk test. Removing a transverse loop leaves a space that
/// retracts onto the subcomplex of simplices the loop misses; the loop bounds
/// a disk iff that subcomplex has two components and one is contractible
/// (Euler characteristic 1).
bool bounds_disk(const TriangulatedSurface& surface, const LevelCycle& cycle);

}  // namespace reeb::fixtures
