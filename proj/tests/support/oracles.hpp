#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "spine/born_map.hpp"
#include "spine/cell_complex.hpp"
#include "spine/obstruction.hpp"
#include "spine/surfaces.hpp"

namespace spine::testing {

// Pure 2-dimensional simplicial complex given by its triangles (plus extra
// edges and vertices that no triangle contains).
struct Simplicial {
  int vertex_count = 0;
  std::vector<std::array<int, 2>> extra_edges;
  std::vector<std::array<int, 3>> triangles;
};

Z2Betti simplicial_betti(const Simplicial& k);
int simplicial_euler(const Simplicial& k);

Simplicial theta_triangulation();
Simplicial sphere_triangulation();
Simplicial torus_triangulation();

// Euler characteristic from the projection alone: each face, open edge and
// crossing contributes its compactly supported Euler characteristic times
// the number of preimage components over one of its points. Only meaningful
// when every sheet is planar and lies over whole faces.
int euler_from_counts(const BornMap& c);

// Orientability of a closed selection by trying every sign assignment.
bool brute_orientable(const SimplePolyhedron& p, const std::vector<std::string>& sheets);

// All connected sheet sets using 0 or 2 wings of every triple arc and no
// boundary wing, by enumerating subsets.
std::set<std::vector<std::string>> brute_closed_surfaces(const SimplePolyhedron& p);

// Whether some sign assignment satisfies every edge parity of `g`.
bool brute_graph_orientable(const IncidenceGraph& g);

}  // namespace spine::testing
