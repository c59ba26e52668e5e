#include <doctest.h>

#include <functional>

#include "spine/cell_complex.hpp"
#include "spine/gallery.hpp"

using namespace spine;

namespace {

std::string error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

// One crossing-free circle in `face`, lying in `sheet`, bounding a disk of it.
SurgeryPlan loop_plan(const std::string& face, const std::string& sheet, SurfaceSpec patch) {
  SurgeryPlan plan;
  plan.result_name = "looped";
  plan.base = build_example_wf();
  plan.combined = plan.base.arrangement;
  add_loop_in_face(plan.combined, face, "T", "aux:T");
  EmbeddedCircle c;
  c.id = "T";
  c.image = "T";
  c.segments = {{sheet, sheet + ".T", sheet + "'"}};
  plan.circles = {c};
  plan.cuts = {{sheet, sheet + "'", {{sheet + "'", true, 0}, {sheet + ".T", true, 0}}}};
  plan.patch = patch;
  return plan;
}

// A boundary circle around a triple circle where the outer sheet A ends and
// the sheets U and L start. The lens T crosses the triple circle twice,
// passing between U and A.
SurgeryPlan ring_lens_plan() {
  RoundSpec spec;
  spec.name = "ring";
  spec.circles.push_back({ArcKind::Boundary, 1, 0, {}, {"A"}, "r3", 3.0});
  spec.circles.push_back({ArcKind::Triple, 2, 1, {0}, {"U", "L"}, "r2", 2.0});
  SurgeryPlan plan;
  plan.result_name = "ringed";
  plan.base = round_reeb(spec);
  plan.combined = plan.base.arrangement;
  add_lens_across_loop(plan.combined, plan.base.arc_to_edge.at("r2"), "T", "aux:T");
  EmbeddedCircle c;
  c.id = "T";
  c.image = "T";
  c.segments = {{"U", "Ud", "U'"}, {"A", "Ad", "A'"}};
  c.crossings = {{"r2", 1, 0, "T.x2"}, {"r2", 0, 1, "T.x1"}};
  plan.circles = {c};
  plan.cuts = {{"U", "U'", {{"U'", true, 0}, {"Ud", true, 0}}}, {"A", "A'", {{"A'", true, 0}, {"Ad", true, 0}}}};
  plan.patch = {true, 0, 1};
  return plan;
}

}  // namespace

TEST_SUITE("surgery") {
  TEST_CASE("annulus plan satisfies the hypotheses") {
    const auto r = check_mt1_hypotheses(example_klein_plan());
    CHECK_MESSAGE(r.ok(), r.to_text());
  }

  TEST_CASE("patch boundary count must match the circles") {
    auto plan = example_klein_plan();
    plan.patch.boundary_count = 3;
    CHECK(check_mt1_hypotheses(plan).has("BoundaryMismatch"));
    CHECK(error_code([&] { attach_surface(plan); }) == "BoundaryMismatch");
  }

  TEST_CASE("curves without a circle are rejected") {
    auto plan = example_klein_plan();
    plan.circles.pop_back();
    plan.patch.boundary_count = 1;
    CHECK(check_mt1_hypotheses(plan).has("UnknownImage"));
  }

  TEST_CASE("two circles on one image overlap") {
    auto plan = example_klein_plan();
    plan.circles[1].image = plan.circles[0].image;
    CHECK(check_mt1_hypotheses(plan).has("CircleOverlap"));
  }

  TEST_CASE("lens plan validates") {
    const auto r = check_mt1_hypotheses(ring_lens_plan());
    CHECK_MESSAGE(r.ok(), r.to_text());
  }

  TEST_CASE("a passage that stays on one wing is not transverse") {
    auto plan = ring_lens_plan();
    plan.circles[0].crossings[0].to_slot = plan.circles[0].crossings[0].from_slot;
    CHECK(check_mt1_hypotheses(plan).has("NonTransverse"));
  }

  TEST_CASE("a passage between the two inner wings is not transverse") {
    auto plan = ring_lens_plan();
    plan.circles[0].crossings[0] = {"r2", 1, 2, "T.x2"};
    CHECK(check_mt1_hypotheses(plan).has("NonTransverse"));
  }

  TEST_CASE("itinerary through the wrong crossing") {
    auto plan = ring_lens_plan();
    std::swap(plan.circles[0].crossings[0].crossing, plan.circles[0].crossings[1].crossing);
    CHECK(check_mt1_hypotheses(plan).has("ItineraryMismatch"));
  }

  TEST_CASE("cut declared for a sheet no circle meets") {
    auto plan = example_klein_plan();
    plan.cuts.push_back({"alpha", "alpha'", {{"alpha'", true, 0}}});
    CHECK(check_mt1_hypotheses(plan).has("CutMismatch"));
  }

  TEST_CASE("annulus attachment gives the Klein example") {
    const auto plan = example_klein_plan();
    const auto res = attach_surface_report(plan);
    const auto& p = res.map.polyhedron;
    CHECK(validate_born_map(res.map).ok());
    CHECK(is_normal(p));
    CHECK(branch_circle_count(p) == 8);
    CHECK(res.new_branch_circles == 2);
    CHECK(res.new_vertices == 0);
    CHECK(euler_characteristic(p) == euler_characteristic(plan.base.polyhedron));
    CHECK(res.map.arrangement.find_face("T1.in")->count == 5);
    CHECK(res.map.arrangement.find_face("T2.in")->count == 4);
    CHECK(res.map == build_example_wfprime());
  }

  TEST_CASE("attaching a punctured torus along one circle") {
    const auto plan = loop_plan("d3", "A8", {true, 1, 1});
    const auto r = check_mt1_hypotheses(plan);
    REQUIRE_MESSAGE(r.ok(), r.to_text());
    const auto out = attach_surface(plan);
    CHECK(validate_born_map(out).ok());
    CHECK(euler_characteristic(out.polyhedron) == euler_characteristic(plan.base.polyhedron) - 1);
    CHECK(z2_homology(out.polyhedron).b1 == z2_homology(plan.base.polyhedron).b1 + 2);
    CHECK(out.arrangement.find_face("T.in")->count == 4);
  }

  TEST_CASE("a disk patch raises the Euler characteristic by one") {
    const auto plan = loop_plan("d5", "tube", {true, 0, 1});
    const auto out = attach_surface(plan);
    CHECK(euler_characteristic(out.polyhedron) == euler_characteristic(plan.base.polyhedron) + 1);
    CHECK(branch_circle_count(out.polyhedron) == 7);
  }

  TEST_CASE("lens surgery creates two vertices") {
    const auto plan = ring_lens_plan();
    const auto res = attach_surface_report(plan);
    CHECK(res.new_vertices == 2);
    CHECK(res.map.polyhedron.vertices.size() == 2);
    CHECK(validate_born_map(res.map).ok());
    CHECK(euler_characteristic(res.map.polyhedron) == euler_characteristic(plan.base.polyhedron) + 1);
    CHECK(res.map.arrangement.find_face("T.fl")->count == 3);
    CHECK(res.map.arrangement.find_face("T.fr")->count == 2);
  }

  TEST_CASE("pieces that do not fit the traced boundary") {
    auto plan = example_klein_plan();
    plan.cuts[0].pieces[1].genus = 1;
    CHECK(error_code([&] { attach_surface(plan); }) == "CutMismatch");
  }

  TEST_CASE("relocation into the empty face") {
    const auto plan = example_relocation_plan();
    CHECK(check_mt1_hypotheses(plan).ok());
    const auto norm = normalize_into_disk(plan);
    CHECK(norm.disks.empty());
    CHECK_FALSE(norm.witness.has_value());
    CHECK(norm.combined.find_curve("D") == nullptr);
    CHECK(check_mt1_hypotheses(norm).ok());
    CHECK(norm.base == plan.base);
  }

  TEST_CASE("normalizing twice changes nothing") {
    const auto once = normalize_into_disk(example_relocation_plan());
    CHECK(normalize_into_disk(once) == once);
  }

  TEST_CASE("relocated surgery") {
    const auto out = apply_mt2(example_relocation_plan());
    CHECK(validate_born_map(out).ok());
    CHECK(euler_characteristic(out.polyhedron) == 4);
    CHECK(out.arrangement.find_face("T1.in")->count == 1);
    CHECK(out.arrangement.find_face("T2.in")->count == 0);
  }

  TEST_CASE("no empty region") {
    SurgeryPlan plan;
    plan.base = theta_born_map();
    plan.combined = plan.base.arrangement;
    CHECK(error_code([&] { normalize_into_disk(plan); }) == "NoEmptyRegion");
  }

  TEST_CASE("circles outside every disk") {
    auto plan = example_relocation_plan();
    plan.disks[0].circles = {"T1"};
    CHECK(error_code([&] { normalize_into_disk(plan); }) == "ContainmentViolated");
  }

  TEST_CASE("witness must carry every circle") {
    auto plan = example_relocation_plan();
    plan.witness_boundary_count = 1;
    CHECK(error_code([&] { normalize_into_disk(plan); }) == "WitnessMismatch");
    plan = example_relocation_plan();
    plan.witness.reset();
    CHECK(error_code([&] { normalize_into_disk(plan); }) == "WitnessMismatch");
  }

  TEST_CASE("a Moebius patch is refused") {
    auto plan = example_relocation_plan();
    plan.patch = {false, 1, 2};
    CHECK(error_code([&] { apply_mt2(plan); }) == "PatchNotOrientable");
  }
}
