#pragma once

// Closed subsurfaces of a simple polyhedron: unions of sheets that use
// exactly 0 or 2 wings of every triple arc and no boundary arc.

#include <map>
#include <string>
#include <vector>

#include "spine/polyhedron.hpp"

namespace spine {

struct SurfaceSelection {
  std::vector<std::string> sheets;
  // Selected slots per arc; arcs that are not used are absent.
  std::map<std::string, std::vector<int>> arc_slots;
  bool orientable = true;
  int euler = 0;

  friend bool operator==(const SurfaceSelection&, const SurfaceSelection&) = default;
};

struct SurfaceType {
  bool orientable = true;
  // Genus when orientable, crosscap number otherwise.
  int genus = 0;

  friend bool operator==(const SurfaceType&, const SurfaceType&) = default;
};

struct SurfaceSearch {
  std::vector<SurfaceSelection> selections;
  bool truncated = false;
  long examined = 0;
};

// Builds the selection induced by a set of sheets (slot sets read from the
// arcs' flags). The annotations are left at their defaults.
SurfaceSelection selection_from_sheets(const SimplePolyhedron& p, std::vector<std::string> sheets);

// Checks that `sel` is a connected, continuation-closed selection.
ValidationReport check_selection(const SimplePolyhedron& p, const SurfaceSelection& sel);

int selection_euler(const SimplePolyhedron& p, const SurfaceSelection& sel);

// Enumerates connected closed selections. `bound` caps the number of search
// nodes examined; hitting it sets `truncated`.
SurfaceSearch find_closed_surfaces(const SimplePolyhedron& p, long bound);

// Orientability by parity union-find over the selected sheets: sheets sharing
// an arc must induce opposite orientations on it.
SurfaceType surface_orientability(const SimplePolyhedron& p, const SurfaceSelection& sel);

// The orientation constraints of a selection: (sheet u, sheet v, parity) with
// parity = +1 when u and v need equal signs. Used by the exhaustive checks.
struct SignConstraint {
  std::string u;
  std::string v;
  int parity = 1;
};
std::vector<SignConstraint> selection_constraints(const SimplePolyhedron& p,
                                                  const SurfaceSelection& sel);

}  // namespace spine
