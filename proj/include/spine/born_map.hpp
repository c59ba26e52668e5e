#pragma once

#include <map>
#include <string>

#include "spine/arrangement.hpp"
#include "spine/polyhedron.hpp"

namespace spine {

// A polyhedron together with the combinatorics of its map to the plane: every
// branch arc goes to one edge of a branch curve, every vertex to one crossing,
// and each face carries the number of sheet layers above it.
//
// Side convention: a wing traversed with dir = +1 lies over the left face of
// its arc's edge, one with dir = -1 over the right face.
struct BornMap {
  SimplePolyhedron polyhedron;
  CurveArrangement arrangement;
  std::map<std::string, std::string> arc_to_edge;
  std::map<std::string, std::string> vertex_to_crossing;

  friend bool operator==(const BornMap&, const BornMap&) = default;
};

// Crossing position (counter-clockwise) of a vertex port.
int port_position(int port);

ValidationReport validate_born_map(const BornMap& c);

// Throws Error("InvalidBornMap") unless `c` validates.
void require_valid(const BornMap& c);

std::map<std::string, int> region_counts(const BornMap& c);

struct RealizabilityCertificate {
  int dimension = 3;
  int singular_components = 0;
  std::string born_map;
  std::string statement;
};

RealizabilityCertificate realizability_certificate(const BornMap& c, int m);

}  // namespace spine
