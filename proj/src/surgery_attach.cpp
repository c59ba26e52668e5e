#include <algorithm>
#include <array>

#include "surgery_internal.hpp"

namespace spine {

namespace {

using detail::wing_of;
using WingKey = std::pair<std::string, int>;

constexpr std::array<int, 4> kPortAt{kPortA1, kPortB1, kPortA2, kPortB2};

struct NewCrossing {
  const EmbeddedCircle* circle = nullptr;
  std::size_t event = 0;
};

// Sheet regions around a new vertex, one per quadrant in vertex_quadrants()
// order: 'X' or 'Y' for the sheet the circle leaves or enters, and 'L' or
// 'R' for its side of the circle.
std::array<std::pair<char, char>, 4> quadrant_regions(bool circle_goes_left) {
  if (circle_goes_left) return {{{'X', 'L'}, {'X', 'R'}, {'Y', 'R'}, {'Y', 'L'}}};
  return {{{'Y', 'R'}, {'Y', 'L'}, {'X', 'L'}, {'X', 'R'}}};
}

class Builder {
 public:
  explicit Builder(const SurgeryPlan& plan) : plan_(plan), base_(plan.base.polyhedron) {}

  SurgeryResult run();

 private:
  void index_plan();
  void build_arcs();
  void build_vertices();
  void assign_sheets();
  void build_arrangement();

  const SurgeryPlan& plan_;
  const SimplePolyhedron& base_;
  Reduction red_;
  std::set<std::string> images_;
  std::map<std::string, const CutSpec*> cuts_;
  std::map<std::string, NewCrossing> new_crossings_;
  std::map<std::string, std::string> arc_of_edge_;  // combined edge -> new arc
  std::map<std::string, std::pair<const EmbeddedCircle*, std::size_t>> circle_edge_;
  std::map<std::string, std::array<EdgeEnd, 4>> rotated_;
  std::map<WingKey, std::string> owner_;
  std::map<WingKey, std::string> cut_sheet_of_;
  std::map<WingKey, int> dir_;
  SimplePolyhedron out_;
  CurveArrangement arr_;
  SurgeryResult result_;
};

void Builder::index_plan() {
  images_ = detail::image_curves(plan_);
  red_ = reduce_to_base(plan_.combined, plan_.base.arrangement, images_);
  for (const auto& cut : plan_.cuts) cuts_[cut.sheet] = &cut;
  for (const auto& circle : plan_.circles) {
    const Curve* curve = plan_.combined.find_curve(circle.image);
    for (std::size_t k = 0; k < curve->edges.size(); ++k) circle_edge_[curve->edges[k]] = {&circle, k};
    for (std::size_t k = 0; k < circle.crossings.size(); ++k)
      new_crossings_[circle.crossings[k].crossing] = {&circle, k};
  }
  for (const auto& [x, _] : new_crossings_) {
    if (base_.find_vertex(x) != nullptr)
      throw Error("DuplicateId", "new vertex " + x + " clashes with an old vertex");
    const Crossing* cr = plan_.combined.find_crossing(x);
    std::size_t start = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      const EdgeEnd& end = cr->ends[k];
      if (end.head && !images_.count(plan_.combined.find_edge(end.edge)->curve)) start = k;
    }
    std::array<EdgeEnd, 4> rot;
    for (std::size_t k = 0; k < 4; ++k) rot[k] = cr->ends[(start + k) % 4];
    rotated_[x] = rot;
  }
}

void Builder::build_arcs() {
  const auto base_arc_of = detail::edge_to_arc(plan_.base);
  std::map<std::string, std::vector<std::string>> pieces;
  for (const auto& curve : plan_.combined.curves) {
    if (images_.count(curve.id)) continue;
    for (const auto& e : curve.edges) pieces[base_arc_of.at(red_.edge_to_base.at(e))].push_back(e);
  }
  auto endpoint_at = [&](const std::string& x, const std::string& edge, bool head) {
    const auto& rot = rotated_.at(x);
    for (std::size_t k = 0; k < 4; ++k)
      if (rot[k].edge == edge && rot[k].head == head) return ArcEnd{x, kPortAt[k]};
    throw Error("BrokenIncidence", "edge " + edge + " is missing at crossing " + x);
  };

  for (const auto& old : base_.arcs) {
    const auto& edges = pieces.at(old.id);
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const ArrEdge* e = plan_.combined.find_edge(edges[k]);
      BranchArc arc;
      arc.id = edges.size() == 1 ? old.id : old.id + "~" + std::to_string(k + 1);
      arc.kind = old.kind;
      if (!e->loop()) {
        std::array<ArcEnd, 2> ends;
        ends[0] = new_crossings_.count(e->tail) ? endpoint_at(e->tail, e->id, false) : (*old.endpoints)[0];
        ends[1] = new_crossings_.count(e->head) ? endpoint_at(e->head, e->id, true) : (*old.endpoints)[1];
        arc.endpoints = ends;
      }
      arc.slots.assign(old.slots.size(), SlotFlag{});
      for (int s = 0; s < static_cast<int>(old.slots.size()); ++s) {
        const std::string& sheet = old.slots[static_cast<std::size_t>(s)].sheet;
        dir_[{arc.id, s}] = wing_of(base_, old, s)->dir;
        if (cuts_.count(sheet))
          cut_sheet_of_[{arc.id, s}] = sheet;
        else
          owner_[{arc.id, s}] = sheet;
      }
      arc_of_edge_[e->id] = arc.id;
      out_.arcs.push_back(std::move(arc));
    }
  }

  for (const auto& circle : plan_.circles) {
    const Curve* curve = plan_.combined.find_curve(circle.image);
    const std::size_t n = curve->edges.size();
    for (std::size_t k = 0; k < n; ++k) {
      const ArrEdge* e = plan_.combined.find_edge(curve->edges[k]);
      BranchArc arc;
      arc.id = n == 1 ? circle.id : circle.id + "~" + std::to_string(k + 1);
      arc.kind = ArcKind::Triple;
      if (!e->loop())
        arc.endpoints = std::array<ArcEnd, 2>{endpoint_at(e->tail, e->id, false),
                                              endpoint_at(e->head, e->id, true)};
      arc.slots.assign(3, SlotFlag{});
      const CircleSegment& seg = circle.segments[k];
      owner_[{arc.id, 0}] = plan_.patch_id;
      owner_[{arc.id, 1}] = seg.left_piece;
      owner_[{arc.id, 2}] = seg.right_piece;
      dir_[{arc.id, 0}] = circle.patch_left ? 1 : -1;
      dir_[{arc.id, 1}] = 1;
      dir_[{arc.id, 2}] = -1;
      arc_of_edge_[e->id] = arc.id;
      out_.arcs.push_back(std::move(arc));
    }
  }
}

void Builder::build_vertices() {
  out_.vertices = base_.vertices;
  for (const auto& x : plan_.combined.crossings) {
    auto it = new_crossings_.find(x.id);
    if (it == new_crossings_.end()) continue;
    const CircleCrossing& ev = it->second.circle->crossings[it->second.event];
    const auto& rot = rotated_.at(x.id);
    const bool goes_left = rot[1].head;
    const BranchArc* old = base_.find_arc(ev.arc);
    const int from_dir = wing_of(base_, *old, ev.from_slot)->dir;
    if (goes_left != (from_dir < 0))
      throw Error("ItineraryMismatch", "circle " + it->second.circle->id +
                                           " crosses at " + x.id + " against its declared wings");
    const int i = ev.from_slot, j = ev.to_slot, k = 3 - i - j;
    auto slot_on = [&](int port, std::pair<char, char> region) {
      if (port == kPortA1 || port == kPortA2) return region.first == 'X' ? i : j;
      return region.second == 'L' ? 1 : 2;
    };
    VertexSpec v;
    v.id = x.id;
    v.roles[kPortA1].free_slot = v.roles[kPortA2].free_slot = k;
    v.roles[kPortB1].free_slot = v.roles[kPortB2].free_slot = 0;
    const auto regions = quadrant_regions(goes_left);
    for (std::size_t q = 0; q < 4; ++q) {
      const auto [u, w] = vertex_quadrants()[q];
      v.roles[static_cast<std::size_t>(u)].q_left = slot_on(u, regions[q]);
      v.roles[static_cast<std::size_t>(w)].q_right = slot_on(w, regions[q]);
    }
    out_.vertices.push_back(v);
    ++result_.new_vertices;
    result_.notes.push_back("vertex " + v.id +
                            " uses the canonical table with the patch wing free on the circle strand");
  }
}

void Builder::assign_sheets() {
  const auto cycles = trace_wing_cycles(out_, dir_);
  std::map<std::string, std::vector<Circuit>> circuits;
  for (const auto& cycle : cycles) {
    std::set<std::string> owners, cut_sheets;
    for (const auto& w : cycle.wings) {
      auto o = owner_.find({w.arc, w.slot});
      if (o != owner_.end()) owners.insert(o->second);
      auto c = cut_sheet_of_.find({w.arc, w.slot});
      if (c != cut_sheet_of_.end()) cut_sheets.insert(c->second);
    }
    if (owners.empty() && cut_sheets.size() == 1) owners.insert(cuts_.at(*cut_sheets.begin())->keep);
    if (owners.size() != 1)
      throw Error("CutMismatch", "a boundary circuit through " + cycle.wings.front().arc +
                                     " cannot be assigned to exactly one sheet");
    const std::string owner = *owners.begin();
    for (const auto& w : cycle.wings)
      if (w.dir != dir_.at({w.arc, w.slot}) && owner != plan_.patch_id)
        throw Error("CutMismatch", "sheet " + owner + " is traversed against its orientation at " +
                                       w.arc);
    circuits[owner].push_back(cycle.wings);
  }

  auto take = [&](const std::string& id) {
    auto it = circuits.find(id);
    if (it == circuits.end()) return std::vector<Circuit>{};
    std::vector<Circuit> c = std::move(it->second);
    circuits.erase(it);
    return c;
  };
  std::map<std::string, int> proper_segments;
  for (const auto& circle : plan_.circles)
    if (!circle.crossings.empty())
      for (const auto& seg : circle.segments) ++proper_segments[seg.sheet];

  for (const auto& sheet : base_.sheets) {
    auto cut = cuts_.find(sheet.id);
    if (cut == cuts_.end()) {
      SheetSpec s = sheet;
      s.circuits = take(sheet.id);
      if (s.circuits.size() != sheet.circuits.size())
        throw Error("CutMismatch", "uncut sheet " + sheet.id + " changed its boundary");
      out_.sheets.push_back(std::move(s));
      continue;
    }
    int chi = 0;
    for (const auto& piece : cut->second->pieces) {
      SheetSpec s{piece.id, piece.orientable, piece.genus, take(piece.id)};
      if (s.circuits.empty())
        throw Error("CutMismatch", "piece " + piece.id + " receives no boundary circuit");
      chi += s.euler_characteristic();
      out_.sheets.push_back(std::move(s));
    }
    const int want = sheet.euler_characteristic() + proper_segments[sheet.id];
    if (chi != want)
      throw Error("CutMismatch", "pieces of " + sheet.id + " have total Euler characteristic " +
                                     std::to_string(chi) + ", expected " + std::to_string(want));
  }
  SheetSpec patch{plan_.patch_id, plan_.patch.orientable, plan_.patch.genus, take(plan_.patch_id)};
  if (static_cast<int>(patch.circuits.size()) != plan_.patch.boundary_count)
    throw Error("BoundaryMismatch", "patch receives " + std::to_string(patch.circuits.size()) +
                                        " boundary circuit(s)");
  out_.sheets.push_back(std::move(patch));
  if (!circuits.empty())
    throw Error("CutMismatch", "boundary assigned to undeclared sheet " + circuits.begin()->first);
  assign_slot_flags(out_);
}

void Builder::build_arrangement() {
  arr_ = plan_.combined;
  std::map<std::string, int> weight;
  for (const auto& circle : plan_.circles) weight[circle.image] = circle.patch_left ? 1 : -1;
  const auto winding = face_winding(arr_, weight);
  for (auto& f : arr_.faces) {
    f.count += winding.at(f.id);
    if (f.count < 0)
      throw Error("CountRule", "face " + f.id + " would get count " + std::to_string(f.count));
  }
  for (auto& curve : arr_.curves) {
    if (!images_.count(curve.id)) continue;
    auto it = std::find_if(plan_.circles.begin(), plan_.circles.end(),
                           [&](const EmbeddedCircle& c) { return c.image == curve.id; });
    curve.source = "branch:" + it->id;
  }
  for (auto& x : arr_.crossings) {
    auto it = rotated_.find(x.id);
    if (it != rotated_.end()) x.ends.assign(it->second.begin(), it->second.end());
  }
}

SurgeryResult Builder::run() {
  const ValidationReport hyp = check_mt1_hypotheses(plan_);
  if (!hyp.ok()) throw Error(hyp.issues.front().code, hyp.issues.front().message);
  index_plan();
  out_.name = plan_.result_name.empty() ? base_.name + "'" : plan_.result_name;
  build_arcs();
  build_vertices();
  assign_sheets();
  build_arrangement();

  BornMap c{out_, arr_, {}, {}};
  for (const auto& [edge, arc] : arc_of_edge_) c.arc_to_edge[arc] = edge;
  c.vertex_to_crossing = plan_.base.vertex_to_crossing;
  for (const auto& [x, _] : new_crossings_) c.vertex_to_crossing[x] = x;

  const ValidationReport r = validate_born_map(c);
  if (!r.ok())
    throw Error("SurgeryInvalid", r.issues.front().code + ": " + r.issues.front().message);
  if (euler_characteristic(c.polyhedron) !=
      euler_characteristic(base_) + plan_.patch.euler_characteristic())
    throw Error("EulerMismatch", "Euler characteristic is not additive for this plan");
  result_.map = std::move(c);
  result_.new_branch_circles = static_cast<int>(plan_.circles.size());
  return result_;
}

}  // namespace

SurgeryResult attach_surface_report(const SurgeryPlan& plan) {
  const ValidationReport hyp = check_mt1_hypotheses(plan);
  if (!hyp.ok()) throw Error(hyp.issues.front().code, hyp.issues.front().message);
  SurgeryPlan bare = plan;
  bare.combined = without_disk_curves(plan);
  bare.disks.clear();
  return Builder(bare).run();
}

}  // namespace spine
