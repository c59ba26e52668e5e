#include "spine/born_map.hpp"

#include <array>
#include <cstdlib>
#include <set>

namespace spine {

namespace {

std::string side_face(const ArrEdge& e, int dir) { return dir > 0 ? e.left : e.right; }

const WingRef* find_wing(const SimplePolyhedron& p, const SlotFlag& flag) {
  const SheetSpec* s = p.find_sheet(flag.sheet);
  if (s == nullptr || flag.circuit < 0 || flag.circuit >= static_cast<int>(s->circuits.size()))
    return nullptr;
  const Circuit& c = s->circuits[static_cast<std::size_t>(flag.circuit)];
  if (flag.position < 0 || flag.position >= static_cast<int>(c.size())) return nullptr;
  return &c[static_cast<std::size_t>(flag.position)];
}

void check_assignment(const BornMap& c, ValidationReport& r) {
  const auto& p = c.polyhedron;
  const auto& a = c.arrangement;
  std::set<std::string> used_edges;
  for (const auto& arc : p.arcs) {
    auto it = c.arc_to_edge.find(arc.id);
    if (it == c.arc_to_edge.end()) {
      r.add("AssignmentIncomplete", "arc " + arc.id + " has no edge");
      continue;
    }
    const ArrEdge* e = a.find_edge(it->second);
    if (e == nullptr) {
      r.add("AssignmentIncomplete", "arc " + arc.id + " maps to unknown edge " + it->second);
      continue;
    }
    if (!used_edges.insert(e->id).second)
      r.add("AssignmentIncomplete", "edge " + e->id + " carries two arcs");
    if (arc.closed() != e->loop())
      r.add("AssignmentIncomplete", "arc " + arc.id + " and edge " + e->id + " differ in closedness");
  }
  for (const auto& [arc, edge] : c.arc_to_edge)
    if (p.find_arc(arc) == nullptr) r.add("AssignmentIncomplete", "unknown arc " + arc);
  for (const auto& e : a.edges)
    if (!used_edges.count(e.id)) r.add("AssignmentIncomplete", "edge " + e.id + " carries no arc");
  for (const auto& cv : a.curves)
    if (!cv.is_branch()) r.add("AuxCurve", "curve " + cv.id + " is not a branch curve");

  std::set<std::string> used_crossings;
  for (const auto& v : p.vertices) {
    auto it = c.vertex_to_crossing.find(v.id);
    if (it == c.vertex_to_crossing.end() || a.find_crossing(it->second) == nullptr) {
      r.add("VertexCrossing", "vertex " + v.id + " has no crossing");
      continue;
    }
    if (!used_crossings.insert(it->second).second)
      r.add("VertexCrossing", "crossing " + it->second + " carries two vertices");
  }
  for (const auto& x : a.crossings)
    if (!used_crossings.count(x.id)) r.add("VertexCrossing", "crossing " + x.id + " has no vertex");
  for (const auto& [v, x] : c.vertex_to_crossing)
    if (p.find_vertex(v) == nullptr) r.add("VertexCrossing", "unknown vertex " + v);
}

void check_ends(const BornMap& c, ValidationReport& r) {
  const auto& a = c.arrangement;
  for (const auto& arc : c.polyhedron.arcs) {
    if (arc.closed()) continue;
    const ArrEdge* e = a.find_edge(c.arc_to_edge.at(arc.id));
    for (int k = 0; k < 2; ++k) {
      const ArcEnd& end = (*arc.endpoints)[static_cast<std::size_t>(k)];
      const std::string x = c.vertex_to_crossing.at(end.vertex);
      const Crossing* cr = a.find_crossing(x);
      const EdgeEnd want{e->id, k == 1};
      if ((k == 0 ? e->tail : e->head) != x || cr->ends.size() != 4 ||
          cr->ends[static_cast<std::size_t>(port_position(end.port))] != want)
        r.add("VertexCrossing", "arc " + arc.id + " end " + std::to_string(k) +
                                    " does not sit at its port of crossing " + x);
    }
  }
}

void check_counts_and_sides(const BornMap& c, ValidationReport& r) {
  const auto& p = c.polyhedron;
  const auto& a = c.arrangement;
  for (const auto& e : a.edges) {
    const int l = a.find_face(e.left)->count;
    const int rt = a.find_face(e.right)->count;
    if (std::abs(l - rt) != 1)
      r.add("CrossingRule", "edge " + e.id + " separates counts " + std::to_string(l) + " and " +
                                std::to_string(rt));
  }
  if (!r.ok()) return;
  for (const auto& arc : p.arcs) {
    const ArrEdge* e = a.find_edge(c.arc_to_edge.at(arc.id));
    const int l = a.find_face(e->left)->count;
    const int rt = a.find_face(e->right)->count;
    const std::string high = l > rt ? e->left : e->right;
    int on_high = 0;
    for (const auto& flag : arc.slots) {
      const WingRef* w = find_wing(p, flag);
      if (w == nullptr) continue;
      if (side_face(*e, w->dir) == high) ++on_high;
    }
    const int want = arc.kind == ArcKind::Boundary ? 1 : 2;
    if (on_high != want)
      r.add("WingSide", "arc " + arc.id + " has " + std::to_string(on_high) +
                            " wing(s) on its higher side, expected " + std::to_string(want));
  }
}

void check_sectors(const BornMap& c, ValidationReport& r) {
  const auto& p = c.polyhedron;
  const auto& a = c.arrangement;
  std::map<std::pair<std::string, int>, const BranchArc*> at_port;
  for (const auto& arc : p.arcs)
    if (!arc.closed())
      for (const auto& end : *arc.endpoints) at_port[{end.vertex, end.port}] = &arc;
  for (const auto& v : p.vertices) {
    const Crossing* x = a.find_crossing(c.vertex_to_crossing.at(v.id));
    for (const auto& q : vertex_quadrants()) {
      for (int side = 0; side < 2; ++side) {
        const int port = q[static_cast<std::size_t>(side)];
        auto it = at_port.find({v.id, port});
        if (it == at_port.end()) continue;
        const BranchArc& arc = *it->second;
        const SlotRoles& roles = v.roles[static_cast<std::size_t>(port)];
        const int slot = side == 0 ? roles.q_left : roles.q_right;
        if (slot < 0 || slot >= static_cast<int>(arc.slots.size())) continue;
        const WingRef* w = find_wing(p, arc.slots[static_cast<std::size_t>(slot)]);
        if (w == nullptr) continue;
        const EdgeEnd& end = x->ends[static_cast<std::size_t>(port_position(port))];
        const ArrEdge* e = a.find_edge(end.edge);
        const std::string sector = side == 0 ? (end.head ? e->right : e->left)
                                             : (end.head ? e->left : e->right);
        if (side_face(*e, w->dir) != sector)
          r.add("VertexSectors", "vertex " + v.id + " port " + std::to_string(port) +
                                     " has its quadrant wing outside the quadrant sector");
      }
    }
  }
}

}  // namespace

int port_position(int port) {
  static constexpr std::array<int, 4> kPos{0, 2, 1, 3};
  return kPos[static_cast<std::size_t>(port & 3)];
}

ValidationReport validate_born_map(const BornMap& c) {
  ValidationReport r;
  ValidationReport pr = validate_polyhedron(c.polyhedron);
  if (!pr.ok()) {
    r.merge(pr, "polyhedron: ");
    return r;
  }
  if (!is_normal(c.polyhedron)) {
    r.add("NotNormal", "polyhedron has swap monodromy");
    return r;
  }
  ValidationReport ar = validate_arrangement(c.arrangement);
  if (!ar.ok()) {
    r.merge(ar, "arrangement: ");
    return r;
  }
  check_assignment(c, r);
  if (!r.ok()) return r;
  check_ends(c, r);
  if (!r.ok()) return r;
  check_counts_and_sides(c, r);
  if (!r.ok()) return r;
  check_sectors(c, r);
  return r;
}

void require_valid(const BornMap& c) {
  const ValidationReport r = validate_born_map(c);
  if (!r.ok()) throw Error("InvalidBornMap", r.issues.front().code + ": " + r.issues.front().message);
}

std::map<std::string, int> region_counts(const BornMap& c) {
  require_valid(c);
  std::map<std::string, int> out;
  for (const auto& f : c.arrangement.faces) out[f.id] = f.count;
  return out;
}

RealizabilityCertificate realizability_certificate(const BornMap& c, int m) {
  if (m < 3) throw Error("DimensionTooLow", "dimension " + std::to_string(m) + " is below 3");
  require_valid(c);
  RealizabilityCertificate cert;
  cert.dimension = m;
  cert.singular_components = branch_circle_count(c.polyhedron);
  cert.born_map = c.polyhedron.name;
  cert.statement = "there is a closed " + std::to_string(m) +
                   "-manifold M and a standard-spherical fold map M -> R^2 whose Reeb space is "
                   "PL homeomorphic to " +
                   (c.polyhedron.name.empty() ? std::string("P") : c.polyhedron.name) +
                   ", with singular set of " + std::to_string(cert.singular_components) +
                   " component(s) mapping onto the branch";
  return cert;
}

}  // namespace spine
