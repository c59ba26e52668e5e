#pragma once

// Attaching a compact surface along disjoint circles in the sheets of a born
// map, and relocating those circles into an empty disk beforehand.

#include <optional>
#include <string>
#include <vector>

#include "spine/born_map.hpp"

namespace spine {

// The part of a circle between two consecutive branch crossings (or the whole
// circle when it crosses nothing). It lies in `sheet` and separates the
// pieces `left_piece` and `right_piece` of the cut sheet locally.
struct CircleSegment {
  std::string sheet;
  std::string left_piece;
  std::string right_piece;

  friend bool operator==(const CircleSegment&, const CircleSegment&) = default;
};

// Passage across a triple arc at a crossing of the combined arrangement, from
// the wing in `from_slot` to the wing in `to_slot`.
struct CircleCrossing {
  std::string arc;
  int from_slot = 0;
  int to_slot = 1;
  std::string crossing;

  friend bool operator==(const CircleCrossing&, const CircleCrossing&) = default;
};

// A circle in P. Its image is curve `image` of the plan's combined
// arrangement; segments[k] covers the k-th edge of that curve and
// crossings[k] is the crossing at the head of that edge.
struct EmbeddedCircle {
  std::string id;
  std::string image;
  bool patch_left = true;
  std::vector<CircleSegment> segments;
  std::vector<CircleCrossing> crossings;

  friend bool operator==(const EmbeddedCircle&, const EmbeddedCircle&) = default;
};

struct SurfaceSpec {
  bool orientable = true;
  int genus = 0;
  int boundary_count = 1;

  int euler_characteristic() const {
    return orientable ? 2 - 2 * genus - boundary_count : 2 - genus - boundary_count;
  }

  friend bool operator==(const SurfaceSpec&, const SurfaceSpec&) = default;
};

struct PieceSpec {
  std::string id;
  bool orientable = true;
  int genus = 0;

  friend bool operator==(const PieceSpec&, const PieceSpec&) = default;
};

// How a sheet met by the circles falls apart. Old boundary circuits that the
// circles leave untouched stay with `keep`.
struct CutSpec {
  std::string sheet;
  std::string keep;
  std::vector<PieceSpec> pieces;

  friend bool operator==(const CutSpec&, const CutSpec&) = default;
};

// A disk of the plane bounded by `curve`, a crossing-free loop of the
// combined arrangement, claimed to contain the images of `circles`.
struct DiskRegion {
  std::string id;
  std::string curve;
  std::vector<std::string> circles;

  friend bool operator==(const DiskRegion&, const DiskRegion&) = default;
};

struct SurgeryPlan {
  std::string result_name;
  BornMap base;
  // Base branch curves together with the circle images.
  CurveArrangement combined;
  std::vector<EmbeddedCircle> circles;
  std::string patch_id = "S";
  SurfaceSpec patch;
  std::vector<CutSpec> cuts;
  std::vector<DiskRegion> disks;
  // Endpoint of the isotopy moving the images into an empty disk, and the
  // number of boundary circles of the surface they are asserted to cobound.
  std::optional<CurveArrangement> witness;
  int witness_boundary_count = 0;

  friend bool operator==(const SurgeryPlan&, const SurgeryPlan&) = default;
};

ValidationReport check_mt1_hypotheses(const SurgeryPlan& plan);

// The combined arrangement with the disk boundary loops erased.
CurveArrangement without_disk_curves(const SurgeryPlan& plan);

struct SurgeryResult {
  BornMap map;
  int new_vertices = 0;
  int new_branch_circles = 0;
  std::vector<std::string> notes;
};

// Throws Error with the first failing hypothesis code, "CutMismatch" when the
// declared pieces do not fit the traced boundary, or "CountRule" when the
// updated counts break the crossing rule.
SurgeryResult attach_surface_report(const SurgeryPlan& plan);
BornMap attach_surface(const SurgeryPlan& plan);

// Replaces the combined arrangement by the witness once the hypotheses hold.
// P and its counts are untouched; the disks and witness are consumed.
SurgeryPlan normalize_into_disk(const SurgeryPlan& plan);

BornMap apply_mt2(const SurgeryPlan& plan);

}  // namespace spine
