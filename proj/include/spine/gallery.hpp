#pragma once

// Ready-made born maps: concentric round families and the two-circle
// Klein-bottle surgery built on top of one of them.

#include <map>
#include <string>
#include <vector>

#include "spine/born_map.hpp"
#include "spine/obstruction.hpp"
#include "spine/surgery.hpp"

namespace spine {

struct RoundCircle {
  ArcKind kind = ArcKind::Triple;
  int inside = 0;
  int outside = 0;
  // Indices into the layer stack just outside this circle of the layers that
  // stop here. Defaults to the topmost one (or two for a merging triple circle).
  std::vector<int> ends;
  // Names of the sheets that start just inside; generated when empty.
  std::vector<std::string> names;
  std::string id;
  double radius = 0.0;
};

// Circles listed from the outermost inwards, all centred at the origin.
struct RoundSpec {
  std::string name;
  std::vector<RoundCircle> circles;
};

struct RoundReeb {
  BornMap map;
  // Sheets lying over each face, bottom to top.
  std::map<std::string, std::vector<std::string>> layers;
};

RoundReeb build_round(const RoundSpec& spec);
BornMap round_reeb(const RoundSpec& spec);

RoundSpec example_wf_spec();
BornMap build_example_wf();

// Two small circles around (-5, 0) in the sheets U8out and L10 bounding an
// annulus patch.
SurgeryPlan example_klein_plan();
BornMap build_example_wfprime();

// Two disjoint circles in U8out, the patch on the left of one and the right of
// the other. Both disk graphs are the single vertex U8out.
SurgeryPlan example_twin_plan();

// The Klein-bottle circles drawn inside an auxiliary disk in the region
// 2 < r < 8, with a witness family that moves them into the outer empty face.
SurgeryPlan example_relocation_plan();

// The disks in P bounded by the crossing-free circles of a plan: the piece of
// the cut sheet that is not kept.
std::vector<DiskInP> plan_disks(const SurgeryPlan& plan);

// Three disks glued along one triple circle.
SimplePolyhedron theta_complex();
BornMap theta_born_map();
SimplePolyhedron closed_surface(const std::string& id, bool orientable, int genus);

// No sheets and no curves; the single face has count 0.
BornMap empty_born_map();

// The theta complex with its third disk removed, leaving a triple arc with
// only two wings. Fails validation.
SimplePolyhedron broken_polyhedron();

// File name and exact contents of every shipped fixture.
std::vector<std::pair<std::string, std::string>> fixture_files();

// Renames every id from the structure (faces by distance from the unbounded
// face, then curves, sheets and vertices by their incidences). Isomorphic maps
// without symmetric ties, such as concentric families, compare equal.
BornMap canonical_form(const BornMap& c);

}  // namespace spine
