#include "spine/gallery.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <tuple>

namespace spine {

namespace {

std::string depth_face(std::size_t depth) { return "d" + std::to_string(depth); }

}  // namespace

RoundReeb build_round(const RoundSpec& spec) {
  RoundReeb out;
  SimplePolyhedron& p = out.map.polyhedron;
  CurveArrangement& a = out.map.arrangement;
  p.name = spec.name;
  a.name = spec.name;
  a.faces.push_back({depth_face(0), 0, true});
  out.layers[depth_face(0)] = {};

  std::vector<std::string> stack;
  std::map<std::string, std::size_t> sheet_index;
  int generated = 0;
  for (std::size_t i = 0; i < spec.circles.size(); ++i) {
    const RoundCircle& c = spec.circles[i];
    const std::string id = c.id.empty() ? "c" + std::to_string(i + 1) : c.id;
    const int before = i == 0 ? 0 : spec.circles[i - 1].inside;
    if (c.outside != before)
      throw Error("CountRule", "circle " + id + " expects outside count " +
                                   std::to_string(c.outside) + " but the region has " +
                                   std::to_string(before));
    if (std::abs(c.inside - c.outside) != 1)
      throw Error("CountRule", "counts across circle " + id + " differ by " +
                                   std::to_string(std::abs(c.inside - c.outside)));
    const bool up = c.inside > c.outside;
    int n_end = 0, n_new = 0;
    if (c.kind == ArcKind::Boundary) {
      (up ? n_new : n_end) = 1;
    } else {
      n_end = up ? 1 : 2;
      n_new = up ? 2 : 1;
    }
    if (n_end > static_cast<int>(stack.size()))
      throw Error("CountRule", "circle " + id + " needs " + std::to_string(n_end) +
                                   " sheet(s) outside it");
    std::vector<int> ends = c.ends;
    if (ends.empty())
      for (int k = n_end; k > 0; --k) ends.push_back(static_cast<int>(stack.size()) - k);
    std::set<int> distinct(ends.begin(), ends.end());
    if (static_cast<int>(ends.size()) != n_end || distinct.size() != ends.size() ||
        std::any_of(ends.begin(), ends.end(),
                    [&](int k) { return k < 0 || k >= static_cast<int>(stack.size()); }))
      throw Error("BadRoundSpec", "circle " + id + " lists the wrong layers to end");
    if (!c.names.empty() && static_cast<int>(c.names.size()) != n_new)
      throw Error("BadRoundSpec", "circle " + id + " names the wrong number of new sheets");

    BranchArc arc;
    arc.id = id;
    arc.kind = c.kind;
    int slot = 0;
    for (int k : ends) {
      const std::string& s = stack[static_cast<std::size_t>(k)];
      p.sheets[sheet_index.at(s)].circuits.push_back({WingRef{id, slot++, -1}});
    }
    std::vector<std::string> kept;
    for (std::size_t k = 0; k < stack.size(); ++k)
      if (!distinct.count(static_cast<int>(k))) kept.push_back(stack[k]);
    stack = std::move(kept);
    for (int k = 0; k < n_new; ++k) {
      const std::string s = c.names.empty() ? "s" + std::to_string(++generated)
                                            : c.names[static_cast<std::size_t>(k)];
      if (sheet_index.count(s)) throw Error("BadRoundSpec", "sheet name " + s + " repeats");
      sheet_index[s] = p.sheets.size();
      p.sheets.push_back({s, true, 0, {{WingRef{id, slot++, 1}}}});
      stack.push_back(s);
    }
    p.arcs.push_back(std::move(arc));

    const std::string inner = depth_face(i + 1);
    a.faces.push_back({inner, c.inside, false});
    const std::string edge = "e." + id;
    a.edges.push_back({edge, id, "", "", inner, depth_face(i)});
    a.curves.push_back({id, "branch", {edge}});
    if (c.radius > 0) a.decor.push_back({id, 0.0, 0.0, c.radius});
    out.map.arc_to_edge[id] = edge;
    out.layers[inner] = stack;
  }
  assign_slot_flags(p);
  const ValidationReport r = validate_born_map(out.map);
  if (!r.ok()) throw Error("BadRoundSpec", r.issues.front().code + ": " + r.issues.front().message);
  return out;
}

BornMap round_reeb(const RoundSpec& spec) { return build_round(spec).map; }

RoundSpec example_wf_spec() {
  using K = ArcKind;
  RoundSpec s;
  s.name = "wf";
  s.circles = {
      {K::Boundary, 1, 0, {}, {"alpha"}, "r11", 11.0},
      {K::Triple, 2, 1, {0}, {"U10out", "L10"}, "r10", 10.0},
      {K::Boundary, 3, 2, {}, {"A8"}, "r9", 9.0},
      {K::Triple, 4, 3, {2}, {"U8out", "L8"}, "r8", 8.0},
      {K::Triple, 5, 4, {0}, {"U10in", "tube"}, "r2", 2.0},
      {K::Triple, 4, 5, {4, 1}, {"U8in"}, "r1", 1.0},
  };
  return s;
}

BornMap build_example_wf() { return round_reeb(example_wf_spec()); }

namespace {

SurgeryPlan two_circle_plan(const std::string& name, const std::string& sheet2,
                            const std::string& keep2, const std::string& disk2, double x2,
                            double r1, double r2) {
  SurgeryPlan plan;
  plan.result_name = name;
  plan.base = build_example_wf();
  plan.combined = plan.base.arrangement;
  const std::string in1 = add_loop_in_face(plan.combined, "d4", "T1", "aux:T1");
  const bool nested = sheet2 != "U8out";
  add_loop_in_face(plan.combined, nested ? in1 : "d4", "T2", "aux:T2");
  plan.combined.decor.push_back({"T1", -5.0, 0.0, r1});
  plan.combined.decor.push_back({"T2", x2, 0.0, r2});

  plan.circles = {
      {"T1", "T1", true, {{"U8out", "d1", "U8out'"}}, {}},
      {"T2", "T2", false, {{sheet2, disk2, keep2}}, {}},
  };
  plan.patch_id = "S";
  plan.patch = {true, 0, 2};
  if (nested) {
    plan.cuts = {{"U8out", "U8out'", {{"U8out'", true, 0}, {"d1", true, 0}}},
                 {sheet2, keep2, {{keep2, true, 0}, {disk2, true, 0}}}};
  } else {
    plan.cuts = {{"U8out", "U8out'", {{"U8out'", true, 0}, {"d1", true, 0}, {disk2, true, 0}}}};
  }
  return plan;
}

}  // namespace

SurgeryPlan example_klein_plan() {
  SurgeryPlan plan = two_circle_plan("wfprime", "L10", "L10'", "d2", -5.0, 2.0, 1.0);
  plan.combined.name = "wfprime";
  return plan;
}

BornMap build_example_wfprime() { return attach_surface(example_klein_plan()); }

SurgeryPlan example_twin_plan() {
  SurgeryPlan plan = two_circle_plan("wftwin", "U8out", "U8out'", "d2", 5.0, 1.0, 1.0);
  plan.combined.name = "wftwin";
  return plan;
}

SurgeryPlan example_relocation_plan() {
  SurgeryPlan plan = example_klein_plan();
  plan.result_name = "relocated";
  CurveArrangement& comb = plan.combined;
  comb = plan.base.arrangement;
  comb.name = "relocated";
  const std::string disk = add_loop_in_face(comb, "d4", "D", "aux:D");
  add_loop_in_face(comb, add_loop_in_face(comb, disk, "T1", "aux:T1"), "T2", "aux:T2");
  comb.decor.push_back({"D", -5.0, 0.0, 2.5});
  comb.decor.push_back({"T1", -5.0, 0.0, 2.0});
  comb.decor.push_back({"T2", -5.0, 0.0, 1.0});
  plan.disks = {{"D0", "D", {"T1", "T2"}}};

  CurveArrangement w = plan.base.arrangement;
  w.name = "relocated";
  add_loop_in_face(w, add_loop_in_face(w, "d0", "T1", "aux:T1"), "T2", "aux:T2");
  w.decor.push_back({"T1", 14.0, 0.0, 2.0});
  w.decor.push_back({"T2", 14.0, 0.0, 1.0});
  plan.witness = w;
  plan.witness_boundary_count = 2;
  return plan;
}

std::vector<DiskInP> plan_disks(const SurgeryPlan& plan) {
  std::vector<DiskInP> out;
  for (const auto& circle : plan.circles) {
    if (!circle.crossings.empty() || circle.segments.size() != 1)
      throw Error("Unsupported", "circle " + circle.id + " crosses the branch");
    DiskInP d;
    d.id = "D" + circle.id;
    d.boundary = circle;
    d.sheets = {circle.segments.front().sheet};
    out.push_back(std::move(d));
  }
  return out;
}

SimplePolyhedron theta_complex() {
  SimplePolyhedron p;
  p.name = "theta";
  p.arcs.push_back({"C", ArcKind::Triple, std::nullopt, {}, Monodromy::Trivial});
  p.sheets = {{"D1", true, 0, {{WingRef{"C", 0, 1}}}},
              {"D2", true, 0, {{WingRef{"C", 1, 1}}}},
              {"D3", true, 0, {{WingRef{"C", 2, -1}}}}};
  assign_slot_flags(p);
  return p;
}

BornMap theta_born_map() {
  BornMap c;
  c.polyhedron = theta_complex();
  c.arrangement.name = "theta";
  c.arrangement.faces = {{"out", 1, true}, {"in", 2, false}};
  c.arrangement.edges = {{"e.C", "C", "", "", "in", "out"}};
  c.arrangement.curves = {{"C", "branch", {"e.C"}}};
  c.arrangement.decor = {{"C", 0.0, 0.0, 1.0}};
  c.arc_to_edge = {{"C", "e.C"}};
  return c;
}

SimplePolyhedron closed_surface(const std::string& id, bool orientable, int genus) {
  SimplePolyhedron p;
  p.name = id;
  p.sheets.push_back({id, orientable, genus, {}});
  return p;
}

}  // namespace spine
