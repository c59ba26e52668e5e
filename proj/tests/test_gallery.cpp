#include <doctest.h>

#include "spine/gallery.hpp"

using namespace spine;

TEST_SUITE("gallery") {
  TEST_CASE("a single boundary circle bounds a disk") {
    RoundSpec spec;
    spec.name = "disk";
    spec.circles.push_back({ArcKind::Boundary, 1, 0, {}, {}, "", 1.0});
    const auto r = build_round(spec);
    CHECK(validate_born_map(r.map).ok());
    CHECK(r.map.polyhedron.sheets.size() == 1);
    CHECK(euler_characteristic(r.map.polyhedron) == 1);
    CHECK(r.map.arrangement.faces.size() == 2);
    CHECK(r.layers.at("d1").size() == 1);
    CHECK(r.layers.at("d0").empty());
  }

  TEST_CASE("counts that jump by two are refused") {
    RoundSpec spec;
    spec.circles.push_back({ArcKind::Boundary, 2, 0, {}, {}, "", 1.0});
    try {
      round_reeb(spec);
      FAIL("expected CountRule");
    } catch (const Error& e) {
      CHECK(e.code() == "CountRule");
    }
  }

  TEST_CASE("a boundary circle cannot end two layers") {
    RoundSpec spec;
    spec.circles.push_back({ArcKind::Boundary, 1, 0, {}, {}, "", 2.0});
    spec.circles.push_back({ArcKind::Boundary, 2, 1, {}, {"X", "Y"}, "", 1.0});
    CHECK_THROWS_AS(round_reeb(spec), Error);
  }

  TEST_CASE("repeated sheet names are refused") {
    RoundSpec spec;
    spec.circles.push_back({ArcKind::Boundary, 1, 0, {}, {"X"}, "", 2.0});
    spec.circles.push_back({ArcKind::Boundary, 2, 1, {}, {"X"}, "", 1.0});
    try {
      round_reeb(spec);
      FAIL("expected BadRoundSpec");
    } catch (const Error& e) {
      CHECK(e.code() == "BadRoundSpec");
    }
  }

  TEST_CASE("the concentric example is a round family") {
    const auto spec = example_wf_spec();
    CHECK(spec.circles.size() == 6);
    CHECK(round_reeb(spec) == build_example_wf());
    const auto layers = build_round(spec).layers;
    CHECK(layers.at("d5").size() == 5);
    CHECK(layers.at("d6").size() == 4);
  }

  TEST_CASE("the Klein example is the surgered concentric example") {
    CHECK(attach_surface(example_klein_plan()) == build_example_wfprime());
    CHECK(example_klein_plan().base == build_example_wf());
  }

  TEST_CASE("plans ship with consistent disks") {
    for (const auto& plan : {example_klein_plan(), example_twin_plan()}) {
      const auto disks = plan_disks(plan);
      CHECK(disks.size() == plan.circles.size());
      for (const auto& d : disks) {
        CHECK(d.sheets.size() == 1);
        CHECK(d.arcs.empty());
      }
    }
  }

  TEST_CASE("every fixture parses back to its builder") {
    const auto files = fixture_files();
    CHECK(files.size() == 12);
    std::set<std::string> names;
    for (const auto& [name, content] : files) {
      names.insert(name);
      CHECK(content.rfind("#", 0) == 0);
    }
    CHECK(names.count("wf.spoly"));
    CHECK(names.count("broken.spoly"));
    CHECK(names.count("relocate.plan"));
  }
}
