#pragma once

// Coordinate-free arrangements of immersed closed curves in the plane, kept
// as a 4-valent planar map with faces.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spine/error.hpp"

namespace spine {

// One end of an edge at a crossing; `head` is true when the edge arrives.
struct EdgeEnd {
  std::string edge;
  bool head = false;

  friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
};

// Ends listed counter-clockwise. Positions 0,2 form one strand, 1,3 the other.
struct Crossing {
  std::string id;
  std::vector<EdgeEnd> ends;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct ArrEdge {
  std::string id;
  std::string curve;
  // Both empty for a closed loop without crossings.
  std::string tail;
  std::string head;
  std::string left;
  std::string right;

  bool loop() const { return tail.empty() && head.empty(); }

  friend bool operator==(const ArrEdge&, const ArrEdge&) = default;
};

struct Curve {
  std::string id;
  // "branch" or "branch:<label>" for images of the branch, "aux:<label>"
  // for auxiliary circles.
  std::string source;
  std::vector<std::string> edges;

  bool is_branch() const { return source == "branch" || source.rfind("branch:", 0) == 0; }

  friend bool operator==(const Curve&, const Curve&) = default;
};

struct Face {
  std::string id;
  int count = 0;
  bool unbounded = false;

  friend bool operator==(const Face&, const Face&) = default;
};

// Optional drawing hints; never used by the combinatorics.
struct CurveDecor {
  std::string curve;
  double cx = 0.0;
  double cy = 0.0;
  double r = 1.0;

  friend bool operator==(const CurveDecor&, const CurveDecor&) = default;
};

struct CurveArrangement {
  std::string name;
  std::vector<Crossing> crossings;
  std::vector<ArrEdge> edges;
  std::vector<Curve> curves;
  std::vector<Face> faces;
  std::vector<CurveDecor> decor;

  const Crossing* find_crossing(const std::string& id) const;
  const ArrEdge* find_edge(const std::string& id) const;
  const Curve* find_curve(const std::string& id) const;
  const Face* find_face(const std::string& id) const;
  Face* find_face(const std::string& id);
  const Face* unbounded_face() const;

  friend bool operator==(const CurveArrangement&, const CurveArrangement&) = default;
};

// An arrangement with no curves: a single unbounded face.
CurveArrangement empty_arrangement(int count = 0, std::string face_id = "f0");

ValidationReport validate_arrangement(const CurveArrangement& a);

// Number of connected components of the union of the curves.
int curve_components(const CurveArrangement& a);

// Signed winding-type sums: starting at 0 on the unbounded face, crossing an
// edge of curve c from its right face to its left face adds weight[c].
// Throws Error("InconsistentWinding") if the value is path dependent.
std::map<std::string, int> face_winding(const CurveArrangement& a,
                                        const std::map<std::string, int>& weight);

// Faces lying inside `curve` (odd winding number).
std::set<std::string> faces_inside(const CurveArrangement& a, const std::string& curve);

// Crossings between two (possibly equal) curves.
std::vector<std::string> crossings_between(const CurveArrangement& a, const std::string& c1,
                                           const std::string& c2);

// Result of deleting a set of curves from a combined arrangement and matching
// what remains against a base arrangement with the same curve and crossing ids.
struct Reduction {
  ValidationReport report;
  std::map<std::string, std::string> edge_to_base;  // combined edge -> base edge
  std::map<std::string, std::string> face_to_base;  // combined face -> base face
};
Reduction reduce_to_base(const CurveArrangement& combined, const CurveArrangement& base,
                         const std::set<std::string>& removed_curves);

// Adds a counter-clockwise loop inside `face`. Returns the id of the new
// inner face (which inherits the count).
std::string add_loop_in_face(CurveArrangement& a, const std::string& face,
                             const std::string& curve_id, const std::string& source);

// Adds a counter-clockwise curve crossing the crossing-free loop `loop_edge`
// twice, bounding a lens that straddles it. The loop edge is replaced by an
// outer piece "<loop>.o" (first crossing to second) and a chord "<loop>.c".
// The new curve runs "<curve>.t1" through the loop's left face, then
// "<curve>.t2" through its right face. Crossings are "<curve>.x1" (curve
// passes right to left) and "<curve>.x2". New lens faces are
// "<curve>.fl" and "<curve>.fr".
void add_lens_across_loop(CurveArrangement& a, const std::string& loop_edge,
                          const std::string& curve_id, const std::string& source);

}  // namespace spine
