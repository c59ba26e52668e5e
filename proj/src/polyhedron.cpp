#include "spine/polyhedron.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace spine {

bool ValidationReport::has(const std::string& code) const {
  return std::any_of(issues.begin(), issues.end(),
                     [&](const Issue& i) { return i.code == code; });
}

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
  for (const auto& i : other.issues) issues.push_back({i.code, prefix + i.message});
  for (const auto& n : other.notes) notes.push_back(prefix + n);
}

std::string ValidationReport::to_text() const {
  std::ostringstream os;
  os << (ok() ? "PASS" : "FAIL") << " (" << issues.size() << " violation"
     << (issues.size() == 1 ? "" : "s") << ")\n";
  for (const auto& i : issues) os << "  violation " << i.code << ": " << i.message << "\n";
  for (const auto& n : notes) os << "  note: " << n << "\n";
  return os.str();
}

WingRole SlotRoles::role_of(int slot) const {
  if (slot == free_slot) return WingRole::Free;
  if (slot == q_left) return WingRole::QLeft;
  return WingRole::QRight;
}

int SlotRoles::slot_of(WingRole role) const {
  switch (role) {
    case WingRole::Free: return free_slot;
    case WingRole::QLeft: return q_left;
    case WingRole::QRight: return q_right;
  }
  return free_slot;
}

bool SlotRoles::is_permutation() const {
  std::array<int, 3> s{free_slot, q_left, q_right};
  std::sort(s.begin(), s.end());
  return s == std::array<int, 3>{0, 1, 2};
}

namespace {

template <class T>
const T* find_by_id(const std::vector<T>& items, const std::string& id) {
  auto it = std::find_if(items.begin(), items.end(), [&](const T& t) { return t.id == id; });
  return it == items.end() ? nullptr : &*it;
}

int strand_partner(int port) { return port ^ 1; }

// Arc-end lookup: (vertex, port) -> (arc index, endpoint index).
using EndIndex = std::map<std::pair<std::string, int>, std::pair<std::size_t, int>>;

EndIndex index_ends(const SimplePolyhedron& p) {
  EndIndex idx;
  for (std::size_t a = 0; a < p.arcs.size(); ++a) {
    const auto& arc = p.arcs[a];
    if (!arc.endpoints) continue;
    for (int e = 0; e < 2; ++e) {
      idx.emplace(std::make_pair((*arc.endpoints)[e].vertex, (*arc.endpoints)[e].port),
                  std::make_pair(a, e));
    }
  }
  return idx;
}

int monodromy_image(const BranchArc& arc, int slot) {
  if (arc.monodromy == Monodromy::Swap && slot != 0) return 3 - slot;
  return slot;
}

std::optional<WingRef> next_wing_indexed(const SimplePolyhedron& p, const EndIndex& ends,
                                         const WingRef& w) {
  const BranchArc* arc = p.find_arc(w.arc);
  if (arc == nullptr) return std::nullopt;
  if (arc->closed()) return WingRef{w.arc, monodromy_image(*arc, w.slot), w.dir};
  const ArcEnd& at = (*arc->endpoints)[w.dir > 0 ? 1 : 0];
  const VertexSpec* v = p.find_vertex(at.vertex);
  if (v == nullptr || at.port < 0 || at.port > 3) return std::nullopt;
  const PortSlot to = continue_at_vertex(*v, at.port, w.slot);
  auto it = ends.find({at.vertex, to.port});
  if (it == ends.end()) return std::nullopt;
  const BranchArc& next = p.arcs[it->second.first];
  return WingRef{next.id, to.slot, it->second.second == 0 ? 1 : -1};
}

}  // namespace

const SheetSpec* SimplePolyhedron::find_sheet(const std::string& id) const {
  return find_by_id(sheets, id);
}
const BranchArc* SimplePolyhedron::find_arc(const std::string& id) const {
  return find_by_id(arcs, id);
}
const VertexSpec* SimplePolyhedron::find_vertex(const std::string& id) const {
  return find_by_id(vertices, id);
}

const std::array<std::array<int, 2>, 4>& vertex_quadrants() {
  static const std::array<std::array<int, 2>, 4> q{{{kPortA1, kPortB1},
                                                    {kPortB1, kPortA2},
                                                    {kPortA2, kPortB2},
                                                    {kPortB2, kPortA1}}};
  return q;
}

PortSlot continue_at_vertex(const VertexSpec& v, int port, int slot) {
  const SlotRoles& here = v.roles[port];
  const WingRole role = here.role_of(slot);
  if (role == WingRole::Free) {
    const int other = strand_partner(port);
    return {other, v.roles[other].slot_of(WingRole::Free)};
  }
  for (const auto& quad : vertex_quadrants()) {
    const int pos = role == WingRole::QLeft ? 0 : 1;
    if (quad[pos] != port) continue;
    const int other = quad[1 - pos];
    return {other, v.roles[other].slot_of(pos == 0 ? WingRole::QRight : WingRole::QLeft)};
  }
  return {port, slot};
}

std::optional<WingRef> next_wing(const SimplePolyhedron& p, const WingRef& w) {
  return next_wing_indexed(p, index_ends(p), w);
}

void assign_slot_flags(SimplePolyhedron& p) {
  std::map<std::string, BranchArc*> by_id;
  for (auto& arc : p.arcs) {
    arc.slots.assign(static_cast<std::size_t>(arc.expected_slots()), SlotFlag{});
    by_id[arc.id] = &arc;
  }
  for (const auto& sheet : p.sheets) {
    for (std::size_t c = 0; c < sheet.circuits.size(); ++c) {
      for (std::size_t k = 0; k < sheet.circuits[c].size(); ++k) {
        const WingRef& w = sheet.circuits[c][k];
        auto it = by_id.find(w.arc);
        if (it == by_id.end() || w.slot < 0 ||
            w.slot >= static_cast<int>(it->second->slots.size()))
          continue;
        it->second->slots[static_cast<std::size_t>(w.slot)] =
            SlotFlag{sheet.id, static_cast<int>(c), static_cast<int>(k)};
      }
    }
  }
}

std::vector<WingCycle> trace_wing_cycles(const SimplePolyhedron& p,
                                         const std::map<std::pair<std::string, int>, int>& start_dir) {
  const EndIndex ends = index_ends(p);
  std::set<std::pair<std::string, int>> seen;
  std::vector<WingCycle> cycles;
  for (const auto& arc : p.arcs) {
    for (int s = 0; s < arc.expected_slots(); ++s) {
      if (seen.count({arc.id, s})) continue;
      auto hint = start_dir.find({arc.id, s});
      WingRef cur{arc.id, s, hint == start_dir.end() ? 1 : hint->second};
      const WingRef start = cur;
      WingCycle cycle;
      for (;;) {
        if (!seen.insert({cur.arc, cur.slot}).second)
          throw Error("BrokenIncidence", "wing " + cur.arc + ":" + std::to_string(cur.slot) +
                                             " reached twice while tracing");
        cycle.wings.push_back(cur);
        auto nxt = next_wing_indexed(p, ends, cur);
        if (!nxt) throw Error("BrokenIncidence", "cannot continue past wing " + cur.arc);
        if (nxt->arc == start.arc && nxt->slot == start.slot) {
          if (nxt->dir != start.dir)
            throw Error("BrokenIncidence", "cycle through " + start.arc + " closes reversed");
          break;
        }
        cur = *nxt;
      }
      cycles.push_back(std::move(cycle));
    }
  }
  return cycles;
}

ValidationReport validate_polyhedron(const SimplePolyhedron& p) {
  ValidationReport r;
  std::set<std::string> ids;
  for (const auto& s : p.sheets)
    if (!ids.insert("s:" + s.id).second) r.add("DuplicateId", "sheet " + s.id);
  for (const auto& a : p.arcs)
    if (!ids.insert("a:" + a.id).second) r.add("DuplicateId", "arc " + a.id);
  for (const auto& v : p.vertices)
    if (!ids.insert("v:" + v.id).second) r.add("DuplicateId", "vertex " + v.id);

  for (const auto& s : p.sheets) {
    if (s.genus < 0) r.add("SheetGenus", "sheet " + s.id + " has negative genus");
    if (!s.orientable && s.genus < 1)
      r.add("CrosscapCount", "non-orientable sheet " + s.id + " needs crosscap number >= 1");
  }

  for (const auto& a : p.arcs) {
    const int n = static_cast<int>(a.slots.size());
    if (a.kind == ArcKind::Triple && n != 3)
      r.add("TripleArcDegree", "arc " + a.id + " has " + std::to_string(n) + " slots, needs 3");
    if (a.kind == ArcKind::Boundary && n != 1)
      r.add("BoundaryArcDegree", "arc " + a.id + " has " + std::to_string(n) + " slots, needs 1");
    if (a.kind == ArcKind::Boundary && !a.closed())
      r.add("BoundaryArcAtVertex", "boundary arc " + a.id + " must be a closed circle");
    if (a.monodromy == Monodromy::Swap && (a.kind != ArcKind::Triple || !a.closed()))
      r.add("MonodromyPlacement", "swap monodromy on arc " + a.id +
                                      " (allowed only on closed triple circles)");
    if (a.monodromy == Monodromy::Swap)
      r.notes.push_back("arc " + a.id + " has swap monodromy; the polyhedron is not normal");
    if (a.endpoints) {
      for (const auto& e : *a.endpoints) {
        if (p.find_vertex(e.vertex) == nullptr)
          r.add("UnknownVertex", "arc " + a.id + " ends at unknown vertex " + e.vertex);
        if (e.port < 0 || e.port > 3)
          r.add("BadPort", "arc " + a.id + " uses port " + std::to_string(e.port));
      }
    }
  }

  std::map<std::pair<std::string, int>, int> port_use;
  for (const auto& a : p.arcs)
    if (a.endpoints)
      for (const auto& e : *a.endpoints) ++port_use[{e.vertex, e.port}];
  for (const auto& v : p.vertices) {
    for (int port = 0; port < 4; ++port) {
      const int used = port_use[{v.id, port}];
      if (used != 1)
        r.add("VertexPortDegree", "vertex " + v.id + " port " + std::to_string(port) +
                                      " is used by " + std::to_string(used) + " arc-ends");
      if (!v.roles[port].is_permutation())
        r.add("SlotRoles", "vertex " + v.id + " port " + std::to_string(port) +
                               " slot roles are not a permutation of 0,1,2");
    }
  }
  for (const auto& a : p.arcs)
    if (a.endpoints && a.kind != ArcKind::Triple)
      r.add("VertexArcKind", "arc " + a.id + " meets a vertex but is not triple");

  if (!r.ok()) return r;

  // Wing coverage and flag agreement.
  std::map<std::pair<std::string, int>, int> traversed;
  bool wings_ok = true;
  for (const auto& s : p.sheets) {
    for (std::size_t c = 0; c < s.circuits.size(); ++c) {
      if (s.circuits[c].empty()) {
        r.add("CircuitOpen", "sheet " + s.id + " has an empty circuit");
        wings_ok = false;
      }
      for (std::size_t k = 0; k < s.circuits[c].size(); ++k) {
        const WingRef& w = s.circuits[c][k];
        const BranchArc* arc = p.find_arc(w.arc);
        if (arc == nullptr || w.slot < 0 || w.slot >= arc->expected_slots() ||
            (w.dir != 1 && w.dir != -1)) {
          r.add("UnknownWing", "sheet " + s.id + " cites wing " + w.arc + ":" +
                                   std::to_string(w.slot));
          wings_ok = false;
          continue;
        }
        ++traversed[{w.arc, w.slot}];
        const SlotFlag& f = arc->slots[static_cast<std::size_t>(w.slot)];
        if (f.sheet != s.id || f.circuit != static_cast<int>(c) ||
            f.position != static_cast<int>(k))
          r.add("FlagMismatch", "arc " + arc->id + " slot " + std::to_string(w.slot) +
                                    " flag does not point back to sheet " + s.id);
      }
    }
  }
  for (const auto& a : p.arcs) {
    for (int slot = 0; slot < a.expected_slots(); ++slot) {
      const int n = traversed[{a.id, slot}];
      if (n != 1) {
        r.add("WingCoverage", "wing " + a.id + ":" + std::to_string(slot) + " is traversed " +
                                  std::to_string(n) + " times");
        wings_ok = false;
      }
    }
  }
  if (!wings_ok) return r;

  const EndIndex ends = index_ends(p);
  for (const auto& s : p.sheets) {
    for (std::size_t c = 0; c < s.circuits.size(); ++c) {
      const Circuit& circ = s.circuits[c];
      for (std::size_t k = 0; k < circ.size(); ++k) {
        auto nxt = next_wing_indexed(p, ends, circ[k]);
        const WingRef& want = circ[(k + 1) % circ.size()];
        if (!nxt || !(*nxt == want)) {
          r.add("CircuitOpen", "sheet " + s.id + " circuit " + std::to_string(c) +
                                   " breaks after wing " + circ[k].arc + ":" +
                                   std::to_string(circ[k].slot));
          break;
        }
      }
    }
  }
  return r;
}

void require_valid(const SimplePolyhedron& p) {
  const ValidationReport r = validate_polyhedron(p);
  if (!r.ok())
    throw Error("InvalidPolyhedron", r.issues.front().code + " (" + r.issues.front().message + ")");
}

bool is_normal(const SimplePolyhedron& p) {
  require_valid(p);
  return std::all_of(p.arcs.begin(), p.arcs.end(),
                     [](const BranchArc& a) { return a.monodromy == Monodromy::Trivial; });
}

int euler_characteristic(const SimplePolyhedron& p) {
  require_valid(p);
  int chi = 0;
  for (const auto& s : p.sheets) chi += s.euler_characteristic();
  chi += static_cast<int>(p.vertices.size());
  for (const auto& a : p.arcs)
    if (!a.closed()) --chi;
  return chi;
}

int branch_circle_count(const SimplePolyhedron& p) {
  const EndIndex ends = index_ends(p);
  std::vector<bool> seen(p.arcs.size(), false);
  int circles = 0;
  for (std::size_t start = 0; start < p.arcs.size(); ++start) {
    if (seen[start]) continue;
    ++circles;
    if (p.arcs[start].closed()) {
      seen[start] = true;
      continue;
    }
    std::size_t cur = start;
    int leave_end = 1;
    while (!seen[cur]) {
      seen[cur] = true;
      const ArcEnd& at = (*p.arcs[cur].endpoints)[leave_end];
      auto it = ends.find({at.vertex, strand_partner(at.port)});
      if (it == ends.end()) break;
      cur = it->second.first;
      leave_end = 1 - it->second.second;
    }
  }
  return circles;
}

int branch_component_count(const SimplePolyhedron& p) {
  std::map<std::string, std::string> parent;
  auto find = [&](std::string x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : p.arcs) parent["a:" + a.id] = "a:" + a.id;
  for (const auto& v : p.vertices) parent["v:" + v.id] = "v:" + v.id;
  for (const auto& a : p.arcs) {
    if (!a.endpoints) continue;
    for (const auto& e : *a.endpoints) {
      if (!parent.count("v:" + e.vertex)) continue;
      parent[find("a:" + a.id)] = find("v:" + e.vertex);
    }
  }
  std::set<std::string> roots;
  for (auto& [k, _] : parent) roots.insert(find(k));
  return static_cast<int>(roots.size());
}

int count_arcs(const SimplePolyhedron& p, ArcKind kind) {
  return static_cast<int>(std::count_if(p.arcs.begin(), p.arcs.end(),
                                        [&](const BranchArc& a) { return a.kind == kind; }));
}

}  // namespace spine
