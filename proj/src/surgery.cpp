#include <algorithm>

#include "surgery_internal.hpp"

namespace spine {

namespace detail {

const WingRef* wing_of(const SimplePolyhedron& p, const BranchArc& arc, int slot) {
  if (slot < 0 || slot >= static_cast<int>(arc.slots.size())) return nullptr;
  const SlotFlag& f = arc.slots[static_cast<std::size_t>(slot)];
  const SheetSpec* s = p.find_sheet(f.sheet);
  if (s == nullptr || f.circuit < 0 || f.circuit >= static_cast<int>(s->circuits.size()))
    return nullptr;
  const Circuit& c = s->circuits[static_cast<std::size_t>(f.circuit)];
  if (f.position < 0 || f.position >= static_cast<int>(c.size())) return nullptr;
  return &c[static_cast<std::size_t>(f.position)];
}

std::set<std::string> image_curves(const SurgeryPlan& plan) {
  std::set<std::string> out;
  for (const auto& c : plan.circles) out.insert(c.image);
  return out;
}

std::map<std::string, std::string> edge_to_arc(const BornMap& c) {
  std::map<std::string, std::string> out;
  for (const auto& [arc, edge] : c.arc_to_edge) out[edge] = arc;
  return out;
}

}  // namespace detail

namespace {

using detail::wing_of;

std::string side_face(const ArrEdge& e, int dir) { return dir > 0 ? e.left : e.right; }

void check_circle(const SurgeryPlan& plan, const EmbeddedCircle& circle, const Reduction& red,
                  const std::map<std::string, const CutSpec*>& cuts, ValidationReport& r) {
  const SimplePolyhedron& p = plan.base.polyhedron;
  const CurveArrangement& comb = plan.combined;
  const Curve* curve = comb.find_curve(circle.image);
  if (curve == nullptr) {
    r.add("ItineraryMismatch", "circle " + circle.id + " has no image curve " + circle.image);
    return;
  }
  if (curve->is_branch())
    r.add("ItineraryMismatch", "circle " + circle.id + " uses branch curve " + curve->id);
  const std::size_t n = curve->edges.size();
  const bool loop = n == 1 && comb.find_edge(curve->edges[0])->loop();
  if (circle.segments.size() != n || circle.crossings.size() != (loop ? 0 : n)) {
    r.add("ItineraryMismatch", "circle " + circle.id + " does not alternate with the edges of " +
                                   curve->id);
    return;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const CircleSegment& seg = circle.segments[k];
    if (p.find_sheet(seg.sheet) == nullptr) {
      r.add("ItineraryMismatch", "circle " + circle.id + " runs in unknown sheet " + seg.sheet);
      continue;
    }
    auto cut = cuts.find(seg.sheet);
    if (cut == cuts.end()) {
      r.add("CutMismatch", "sheet " + seg.sheet + " is met by " + circle.id + " but has no cut");
      continue;
    }
    for (const auto& piece : {seg.left_piece, seg.right_piece}) {
      const auto& ps = cut->second->pieces;
      if (std::none_of(ps.begin(), ps.end(), [&](const PieceSpec& q) { return q.id == piece; }))
        r.add("CutMismatch", "piece " + piece + " is not declared for sheet " + seg.sheet);
    }
  }
  if (loop) return;
  const auto base_arc_of = detail::edge_to_arc(plan.base);
  for (std::size_t k = 0; k < n; ++k) {
    const CircleCrossing& cr = circle.crossings[k];
    const ArrEdge* in = comb.find_edge(curve->edges[k]);
    const ArrEdge* out = comb.find_edge(curve->edges[(k + 1) % n]);
    const std::string where = "circle " + circle.id + " at " + cr.crossing;
    if (in->head != cr.crossing) {
      r.add("ItineraryMismatch", where + " is not the end of edge " + in->id);
      continue;
    }
    const BranchArc* arc = p.find_arc(cr.arc);
    if (arc == nullptr) {
      r.add("ItineraryMismatch", where + " cites unknown arc " + cr.arc);
      continue;
    }
    if (arc->kind == ArcKind::Boundary) {
      r.add("NonTransverse", where + " meets boundary arc " + cr.arc);
      continue;
    }
    if (cr.from_slot == cr.to_slot || cr.from_slot < 0 || cr.from_slot > 2 || cr.to_slot < 0 ||
        cr.to_slot > 2) {
      r.add("NonTransverse", where + " does not pass between two wings of " + cr.arc);
      continue;
    }
    const Crossing* x = comb.find_crossing(cr.crossing);
    std::string branch_edge;
    for (const auto& end : x->ends) {
      const ArrEdge* e = comb.find_edge(end.edge);
      if (e->curve != circle.image) branch_edge = e->id;
    }
    auto be = red.edge_to_base.find(branch_edge);
    if (be == red.edge_to_base.end() || base_arc_of.at(be->second) != cr.arc) {
      r.add("ItineraryMismatch", where + " lies on an edge not carrying arc " + cr.arc);
      continue;
    }
    const WingRef* wf = wing_of(p, *arc, cr.from_slot);
    const WingRef* wt = wing_of(p, *arc, cr.to_slot);
    const std::string from_sheet = arc->slots[static_cast<std::size_t>(cr.from_slot)].sheet;
    const std::string to_sheet = arc->slots[static_cast<std::size_t>(cr.to_slot)].sheet;
    if (from_sheet != circle.segments[k].sheet || to_sheet != circle.segments[(k + 1) % n].sheet)
      r.add("ItineraryMismatch", where + " passes between sheets other than its segments'");
    if (wf->dir == wt->dir) {
      r.add("NonTransverse", where + " runs along " + cr.arc + " instead of crossing it");
      continue;
    }
    const ArrEdge* base_edge = plan.base.arrangement.find_edge(be->second);
    const auto& f2b = red.face_to_base;
    if (f2b.at(in->left) != side_face(*base_edge, wf->dir) ||
        f2b.at(out->left) != side_face(*base_edge, wt->dir))
      r.add("ItineraryMismatch", where + " approaches " + cr.arc + " from the wrong side");
  }
}

// The count-0 base face holding every circle, if all circles are crossing-free
// loops in one such face of `arr`.
std::optional<std::string> common_empty_face(const SurgeryPlan& plan, const CurveArrangement& arr) {
  const Reduction red = reduce_to_base(arr, plan.base.arrangement, detail::image_curves(plan));
  if (!red.report.ok()) return std::nullopt;
  std::set<std::string> hosts;
  for (const auto& circle : plan.circles) {
    if (!circle.crossings.empty()) return std::nullopt;
    const Curve* c = arr.find_curve(circle.image);
    if (c == nullptr) return std::nullopt;
    for (const auto& eid : c->edges) {
      const ArrEdge* e = arr.find_edge(eid);
      if (!e->loop()) return std::nullopt;
      hosts.insert(red.face_to_base.at(e->left));
      hosts.insert(red.face_to_base.at(e->right));
    }
  }
  if (hosts.size() != 1) return std::nullopt;
  const Face* f = plan.base.arrangement.find_face(*hosts.begin());
  if (f == nullptr || f->count != 0) return std::nullopt;
  return f->id;
}

}  // namespace

CurveArrangement without_disk_curves(const SurgeryPlan& plan) {
  CurveArrangement a = plan.combined;
  for (const auto& disk : plan.disks) {
    const Curve* c = a.find_curve(disk.curve);
    const ArrEdge* e = c != nullptr && c->edges.size() == 1 ? a.find_edge(c->edges[0]) : nullptr;
    if (e == nullptr || !e->loop() || c->is_branch())
      throw Error("ContainmentViolated",
                  "disk " + disk.id + " is not bounded by a crossing-free auxiliary loop");
    const std::string gone = e->left, keep = e->right;
    const std::string edge_id = e->id, curve_id = c->id;
    const bool unbounded = a.find_face(gone)->unbounded;
    std::erase_if(a.edges, [&](const ArrEdge& x) { return x.id == edge_id; });
    std::erase_if(a.curves, [&](const Curve& x) { return x.id == curve_id; });
    std::erase_if(a.faces, [&](const Face& f) { return f.id == gone; });
    std::erase_if(a.decor, [&](const CurveDecor& d) { return d.curve == curve_id; });
    if (unbounded) a.find_face(keep)->unbounded = true;
    for (auto& x : a.edges) {
      if (x.left == gone) x.left = keep;
      if (x.right == gone) x.right = keep;
    }
  }
  return a;
}

ValidationReport check_mt1_hypotheses(const SurgeryPlan& original) {
  ValidationReport r;
  SurgeryPlan plan = original;
  try {
    plan.combined = without_disk_curves(original);
  } catch (const Error& e) {
    r.add(e.code(), e.what());
    return r;
  }
  plan.disks.clear();
  const ValidationReport base = validate_born_map(plan.base);
  if (!base.ok()) {
    r.merge(base, "base: ");
    return r;
  }
  const ValidationReport arr = validate_arrangement(plan.combined);
  if (!arr.ok()) {
    r.merge(arr, "combined: ");
    return r;
  }
  const SimplePolyhedron& p = plan.base.polyhedron;

  if (plan.patch.boundary_count != static_cast<int>(plan.circles.size()))
    r.add("BoundaryMismatch", "patch has " + std::to_string(plan.patch.boundary_count) +
                                  " boundary circles but the plan has " +
                                  std::to_string(plan.circles.size()) + " circle(s)");
  if (plan.patch.genus < 0 || (!plan.patch.orientable && plan.patch.genus < 1))
    r.add("PatchInvalid", "patch genus is out of range");

  std::set<std::string> images, ids, labels;
  for (const auto& c : plan.circles) {
    if (!ids.insert(c.id).second) r.add("CircleOverlap", "circle id " + c.id + " repeats");
    if (!images.insert(c.image).second)
      r.add("CircleOverlap", "two circles share image " + c.image);
    for (const auto& x : c.crossings)
      if (!labels.insert(x.crossing).second)
        r.add("CircleOverlap", "crossing " + x.crossing + " is used twice");
  }
  for (const auto& cv : plan.combined.curves)
    if (!cv.is_branch() && !images.count(cv.id))
      r.add("UnknownImage", "curve " + cv.id + " is not the image of a circle");
  for (const auto& x : plan.combined.crossings) {
    int aux = 0;
    for (const auto& end : x.ends) aux += images.count(plan.combined.find_edge(end.edge)->curve);
    if (aux == 4)
      r.add("ImageCrossing", "circle images meet at crossing " + x.id);
    else if (aux == 2 && !labels.count(x.id))
      r.add("ItineraryMismatch", "crossing " + x.id + " is not an itinerary event");
  }

  std::map<std::string, const CutSpec*> cuts;
  std::set<std::string> piece_ids;
  for (const auto& cut : plan.cuts) {
    if (p.find_sheet(cut.sheet) == nullptr) r.add("CutMismatch", "cut names unknown sheet " + cut.sheet);
    if (!cuts.emplace(cut.sheet, &cut).second) r.add("CutMismatch", "sheet " + cut.sheet + " cut twice");
    if (std::none_of(cut.pieces.begin(), cut.pieces.end(),
                     [&](const PieceSpec& q) { return q.id == cut.keep; }))
      r.add("CutMismatch", "keep piece " + cut.keep + " is not a piece of " + cut.sheet);
    for (const auto& piece : cut.pieces) {
      if (!piece_ids.insert(piece.id).second ||
          (piece.id != cut.sheet && p.find_sheet(piece.id) != nullptr))
        r.add("DuplicateId", "piece id " + piece.id + " is not fresh");
      if (piece.genus < 0 || (!piece.orientable && piece.genus < 1))
        r.add("CutMismatch", "piece " + piece.id + " has an impossible genus");
    }
  }
  if (p.find_sheet(plan.patch_id) != nullptr || piece_ids.count(plan.patch_id))
    r.add("DuplicateId", "patch id " + plan.patch_id + " is not fresh");
  std::set<std::string> met;
  for (const auto& c : plan.circles)
    for (const auto& s : c.segments) met.insert(s.sheet);
  for (const auto& [sheet, _] : cuts)
    if (!met.count(sheet)) r.add("CutMismatch", "sheet " + sheet + " is cut but no circle meets it");
  if (!r.ok()) return r;

  const Reduction red = reduce_to_base(plan.combined, plan.base.arrangement, images);
  r.merge(red.report, "combined: ");
  if (!r.ok()) return r;
  for (const auto& c : plan.circles) check_circle(plan, c, red, cuts, r);
  return r;
}

SurgeryPlan normalize_into_disk(const SurgeryPlan& plan) {
  require_valid(plan.base);
  const auto& faces = plan.base.arrangement.faces;
  if (std::none_of(faces.begin(), faces.end(), [](const Face& f) { return f.count == 0; }))
    throw Error("NoEmptyRegion", "every face of the base map has a positive count");

  SurgeryPlan out = plan;
  out.disks.clear();
  out.witness.reset();
  out.witness_boundary_count = 0;
  out.combined = without_disk_curves(plan);
  if (!plan.witness && common_empty_face(out, out.combined)) return out;

  std::set<std::string> contained;
  for (const auto& disk : plan.disks) {
    const std::set<std::string> region = faces_inside(plan.combined, disk.curve);
    for (const auto& cid : disk.circles) {
      auto it = std::find_if(plan.circles.begin(), plan.circles.end(),
                             [&](const EmbeddedCircle& c) { return c.id == cid; });
      const Curve* curve = it == plan.circles.end() ? nullptr : plan.combined.find_curve(it->image);
      if (curve == nullptr)
        throw Error("ContainmentViolated", "disk " + disk.id + " names unknown circle " + cid);
      for (const auto& eid : curve->edges) {
        const ArrEdge* e = plan.combined.find_edge(eid);
        if (!region.count(e->left) || !region.count(e->right))
          throw Error("ContainmentViolated", "circle " + cid + " leaves the interior of " + disk.id);
      }
      contained.insert(cid);
    }
  }
  for (const auto& c : plan.circles)
    if (!contained.count(c.id))
      throw Error("ContainmentViolated", "circle " + c.id + " lies in no disk");

  if (!plan.witness) throw Error("WitnessMismatch", "no isotopy witness supplied");
  if (plan.witness_boundary_count != plan.patch.boundary_count ||
      plan.witness_boundary_count != static_cast<int>(plan.circles.size()))
    throw Error("WitnessMismatch", "witness surface has " +
                                       std::to_string(plan.witness_boundary_count) +
                                       " boundary circle(s)");
  const ValidationReport wr = validate_arrangement(*plan.witness);
  if (!wr.ok()) throw Error("WitnessMismatch", "witness arrangement: " + wr.issues.front().message);
  if (!common_empty_face(plan, *plan.witness))
    throw Error("WitnessMismatch",
                "witness does not place every circle in a single empty face without crossings");

  out.combined = *plan.witness;
  const ValidationReport after = check_mt1_hypotheses(out);
  if (!after.ok())
    throw Error("WitnessMismatch", "relocated plan fails: " + after.issues.front().code + ": " +
                                       after.issues.front().message);
  return out;
}

BornMap apply_mt2(const SurgeryPlan& plan) {
  if (!plan.patch.orientable)
    throw Error("PatchNotOrientable", "the attached surface must be orientable");
  return attach_surface(normalize_into_disk(plan));
}

BornMap attach_surface(const SurgeryPlan& plan) { return attach_surface_report(plan).map; }


}  // namespace spine
