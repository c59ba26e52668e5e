#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "spine/polyhedron.hpp"

namespace spine {

// Finite 2-dimensional CW complex. Each 2-cell lists the 1-cells of its
// attaching word with repetition; orientation signs are dropped since only
// mod-2 chains are computed from it.
struct CellComplex {
  int vertex_count = 0;
  std::vector<std::array<int, 2>> edges;
  std::vector<std::vector<int>> faces;

  int c0() const { return vertex_count; }
  int c1() const { return static_cast<int>(edges.size()); }
  int c2() const { return static_cast<int>(faces.size()); }
  int euler_characteristic() const { return c0() - c1() + c2(); }
};

struct Z2Betti {
  int b0 = 0;
  int b1 = 0;
  int b2 = 0;

  friend bool operator==(const Z2Betti&, const Z2Betti&) = default;
};

// Cell structure refining the sheets, arcs and vertices: one 0-cell per
// vertex, per closed arc and per sheet; one 1-cell per arc, per handle or
// crosscap generator and per boundary tether; one 2-cell per sheet.
CellComplex cellulate(const SimplePolyhedron& p);

Z2Betti z2_betti(const CellComplex& k);
Z2Betti z2_homology(const SimplePolyhedron& p);

// Rank over GF(2) of a matrix given as packed bit rows.
int gf2_rank(std::vector<std::vector<std::uint64_t>> rows);

}  // namespace spine
