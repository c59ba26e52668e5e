#pragma once

// Incidence model of a simple polyhedron: sheets (components of P minus the
// branch), branch arcs carrying wing slots, and vertices where two branch
// strands cross.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spine/error.hpp"

namespace spine {

enum class ArcKind { Boundary, Triple };
enum class Monodromy { Trivial, Swap };
enum class WingRole { Free, QLeft, QRight };

// Ports of a vertex: strand a is (a1, a2), strand b is (b1, b2).
inline constexpr int kPortA1 = 0;
inline constexpr int kPortA2 = 1;
inline constexpr int kPortB1 = 2;
inline constexpr int kPortB2 = 3;

// One traversal of a wing along a sheet boundary circuit. `dir` is +1 when
// the circuit runs along the arc's orientation, -1 against it.
struct WingRef {
  std::string arc;
  int slot = 0;
  int dir = 1;

  friend bool operator==(const WingRef&, const WingRef&) = default;
};

using Circuit = std::vector<WingRef>;

struct SheetSpec {
  std::string id;
  bool orientable = true;
  // Orientable genus, or crosscap number (>= 1) when non-orientable.
  int genus = 0;
  std::vector<Circuit> circuits;

  int euler_characteristic() const {
    const int b = static_cast<int>(circuits.size());
    return orientable ? 2 - 2 * genus - b : 2 - genus - b;
  }

  friend bool operator==(const SheetSpec&, const SheetSpec&) = default;
};

struct ArcEnd {
  std::string vertex;
  int port = 0;

  friend bool operator==(const ArcEnd&, const ArcEnd&) = default;
};

struct SlotFlag {
  std::string sheet;
  int circuit = 0;
  int position = 0;

  friend bool operator==(const SlotFlag&, const SlotFlag&) = default;
};

struct BranchArc {
  std::string id;
  ArcKind kind = ArcKind::Triple;
  // Empty for a closed circle with no vertices; otherwise (start, end).
  std::optional<std::array<ArcEnd, 2>> endpoints;
  std::vector<SlotFlag> slots;
  Monodromy monodromy = Monodromy::Trivial;

  bool closed() const { return !endpoints.has_value(); }
  int expected_slots() const { return kind == ArcKind::Boundary ? 1 : 3; }

  friend bool operator==(const BranchArc&, const BranchArc&) = default;
};

// Designation of the three slots of one arc-end at a vertex.
struct SlotRoles {
  int free_slot = 0;
  int q_left = 1;
  int q_right = 2;

  WingRole role_of(int slot) const;
  int slot_of(WingRole role) const;
  bool is_permutation() const;

  friend bool operator==(const SlotRoles&, const SlotRoles&) = default;
};

struct VertexSpec {
  std::string id;
  std::array<SlotRoles, 4> roles{};

  friend bool operator==(const VertexSpec&, const VertexSpec&) = default;
};

struct SimplePolyhedron {
  std::string name;
  std::vector<SheetSpec> sheets;
  std::vector<BranchArc> arcs;
  std::vector<VertexSpec> vertices;

  const SheetSpec* find_sheet(const std::string& id) const;
  const BranchArc* find_arc(const std::string& id) const;
  const VertexSpec* find_vertex(const std::string& id) const;

  friend bool operator==(const SimplePolyhedron&, const SimplePolyhedron&) = default;
};

// Where a wing slot at a vertex port continues to: (port, slot).
struct PortSlot {
  int port = 0;
  int slot = 0;

  friend bool operator==(const PortSlot&, const PortSlot&) = default;
};

// Continuation table at a vertex. Free wings pass straight along their
// strand; Q wings turn into the neighbouring strand within their quadrant.
// Quadrants in cyclic order: (a1,b1), (b1,a2), (a2,b2), (b2,a1). A Q slot is
// Q-left at the quadrant where its port is listed first.
PortSlot continue_at_vertex(const VertexSpec& v, int port, int slot);

// The four quadrants as (first port, second port).
const std::array<std::array<int, 2>, 4>& vertex_quadrants();

// The traversal following `w` along its boundary circuit, or nullopt when the
// incidence data is too broken to say.
std::optional<WingRef> next_wing(const SimplePolyhedron& p, const WingRef& w);

// Rewrites every arc's slot flags from the sheet circuits.
void assign_slot_flags(SimplePolyhedron& p);

// Partition of all (arc, slot) wings into boundary cycles, obtained purely
// from the continuation structure. The cycle through a wing starts in the
// direction chosen by `start_dir` (defaults to +1).
struct WingCycle {
  Circuit wings;
};
std::vector<WingCycle> trace_wing_cycles(
    const SimplePolyhedron& p,
    const std::map<std::pair<std::string, int>, int>& start_dir = {});

ValidationReport validate_polyhedron(const SimplePolyhedron& p);

// Throws Error("InvalidPolyhedron") unless `p` validates.
void require_valid(const SimplePolyhedron& p);

bool is_normal(const SimplePolyhedron& p);

int euler_characteristic(const SimplePolyhedron& p);

// Number of immersed branch circles: closed arcs plus closed strands that run
// straight through vertices.
int branch_circle_count(const SimplePolyhedron& p);

// Connected components of the branch graph (arcs and vertices).
int branch_component_count(const SimplePolyhedron& p);

int count_arcs(const SimplePolyhedron& p, ArcKind kind);

}  // namespace spine
