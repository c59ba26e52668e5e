#include <doctest.h>

#include <algorithm>

#include "spine/cell_complex.hpp"
#include "spine/gallery.hpp"
#include "spine/surfaces.hpp"
#include "support/oracles.hpp"

using namespace spine;

namespace {

int count_orientable(const SurfaceSearch& s, bool orientable) {
  return static_cast<int>(std::count_if(s.selections.begin(), s.selections.end(),
                                        [&](const SurfaceSelection& x) { return x.orientable == orientable; }));
}

SimplePolyhedron swapped_theta() {
  SimplePolyhedron p;
  p.name = "swapped";
  p.sheets.push_back({"M", true, 0, {{{"C", 1, 1}, {"C", 2, 1}}}});
  p.sheets.push_back({"D", true, 0, {{{"C", 0, -1}}}});
  BranchArc c;
  c.id = "C";
  c.monodromy = Monodromy::Swap;
  p.arcs.push_back(c);
  assign_slot_flags(p);
  return p;
}

}  // namespace

TEST_SUITE("spoly-core") {
  TEST_CASE("closed genus-two sheet is valid and normal") {
    const auto p = closed_surface("F", true, 2);
    CHECK(validate_polyhedron(p).ok());
    CHECK(is_normal(p));
    CHECK(euler_characteristic(p) == -2);
    CHECK(branch_circle_count(p) == 0);
  }

  TEST_CASE("theta complex validates") {
    const auto p = theta_complex();
    const auto r = validate_polyhedron(p);
    CHECK_MESSAGE(r.ok(), r.to_text());
    CHECK(is_normal(p));
    CHECK(count_arcs(p, ArcKind::Triple) == 1);
    CHECK(branch_component_count(p) == 1);
  }

  TEST_CASE("a triple arc with two wings is rejected") {
    const auto r = validate_polyhedron(broken_polyhedron());
    CHECK_FALSE(r.ok());
    CHECK(r.has("TripleArcDegree"));
    CHECK_THROWS_AS(require_valid(broken_polyhedron()), Error);
  }

  TEST_CASE("a boundary arc with extra wings is rejected") {
    auto p = theta_complex();
    p.arcs[0].kind = ArcKind::Boundary;
    CHECK(validate_polyhedron(p).has("BoundaryArcDegree"));
  }

  TEST_CASE("unknown arcs in a circuit are reported") {
    auto p = theta_complex();
    p.sheets[0].circuits[0][0].arc = "nowhere";
    CHECK_FALSE(validate_polyhedron(p).ok());
  }

  TEST_CASE("concentric example has six branch circles and no vertices") {
    const auto wf = build_example_wf();
    const auto& p = wf.polyhedron;
    CHECK(validate_polyhedron(p).ok());
    CHECK(branch_circle_count(p) == 6);
    CHECK(count_arcs(p, ArcKind::Triple) == 4);
    CHECK(count_arcs(p, ArcKind::Boundary) == 2);
    CHECK(p.vertices.empty());
    CHECK(is_normal(p));
  }

  TEST_CASE("swap monodromy is valid but not normal") {
    const auto p = swapped_theta();
    const auto r = validate_polyhedron(p);
    CHECK_MESSAGE(r.ok(), r.to_text());
    CHECK_FALSE(is_normal(p));
  }

  TEST_CASE("euler characteristic") {
    CHECK(euler_characteristic(closed_surface("T", true, 1)) == 0);
    CHECK(euler_characteristic(closed_surface("S", true, 0)) == 2);
    CHECK(euler_characteristic(closed_surface("K", false, 2)) == 0);
    CHECK(euler_characteristic(theta_complex()) == 3);
    CHECK(euler_characteristic(build_example_wf().polyhedron) == 4);
  }

  TEST_CASE("cellulation matches the count formula") {
    for (const auto& p : {theta_complex(), closed_surface("T", true, 1), closed_surface("P", false, 1),
                          build_example_wf().polyhedron, build_example_wfprime().polyhedron}) {
      const CellComplex k = cellulate(p);
      CHECK(k.euler_characteristic() == euler_characteristic(p));
    }
  }

  TEST_CASE("a single disk over a boundary circle") {
    RoundSpec spec;
    spec.name = "disk";
    spec.circles = {{ArcKind::Boundary, 1, 0, {}, {"D"}, "c", 1.0}};
    const SimplePolyhedron p = round_reeb(spec).polyhedron;
    const CellComplex k = cellulate(p);
    CHECK(k.c2() == 1);
    CHECK(k.euler_characteristic() == 1);
    CHECK(euler_characteristic(p) == 1);
    const Z2Betti b = z2_betti(k);
    CHECK(b.b0 == 1);
    CHECK(b.b1 == 0);
    CHECK(b.b2 == 0);
  }

  TEST_CASE("mod-two homology of closed surfaces") {
    for (int g = 0; g <= 4; ++g) {
      CHECK(z2_homology(closed_surface("F", true, g)) == Z2Betti{1, 2 * g, 1});
    }
    for (int k = 1; k <= 3; ++k) {
      CHECK(z2_homology(closed_surface("N", false, k)) == Z2Betti{1, k, 1});
    }
  }

  TEST_CASE("mod-two homology agrees with simplicial models") {
    using namespace spine::testing;
    CHECK(z2_homology(theta_complex()) == simplicial_betti(theta_triangulation()));
    CHECK(z2_homology(theta_complex()) == Z2Betti{1, 0, 2});
    CHECK(z2_homology(closed_surface("S", true, 0)) == simplicial_betti(sphere_triangulation()));
    CHECK(z2_homology(closed_surface("T", true, 1)) == simplicial_betti(torus_triangulation()));
    CHECK(simplicial_euler(theta_triangulation()) == 3);
  }

  TEST_CASE("gf2 rank") {
    CHECK(gf2_rank({{0b011}, {0b110}, {0b101}}) == 2);
    CHECK(gf2_rank({{0b001}, {0b010}, {0b100}}) == 3);
    CHECK(gf2_rank({}) == 0);
  }

  TEST_CASE("closed surfaces of a single closed sheet") {
    const auto s = find_closed_surfaces(closed_surface("T", true, 1), 1000);
    REQUIRE(s.selections.size() == 1);
    CHECK(s.selections[0].orientable);
    CHECK(s.selections[0].euler == 0);
  }

  TEST_CASE("theta complex contains three spheres") {
    const auto p = theta_complex();
    const auto s = find_closed_surfaces(p, 1000);
    CHECK(s.selections.size() == 3);
    CHECK(count_orientable(s, true) == 3);
    for (const auto& sel : s.selections) CHECK(sel.euler == 2);
    std::set<std::vector<std::string>> got;
    for (auto sel : s.selections) {
      std::sort(sel.sheets.begin(), sel.sheets.end());
      got.insert(sel.sheets);
    }
    CHECK(got == spine::testing::brute_closed_surfaces(p));
  }

  TEST_CASE("surgered example contains a Klein bottle") {
    const auto p = build_example_wfprime().polyhedron;
    const auto s = find_closed_surfaces(p, 200000);
    CHECK_FALSE(s.truncated);
    const auto klein = std::find_if(s.selections.begin(), s.selections.end(),
                                    [](const SurfaceSelection& x) { return !x.orientable; });
    REQUIRE(klein != s.selections.end());
    CHECK(klein->euler == 0);
    CHECK(surface_orientability(p, *klein) == SurfaceType{false, 2});
    CHECK_FALSE(spine::testing::brute_orientable(p, klein->sheets));
  }

  TEST_CASE("surface orientability of the theta spheres") {
    const auto p = theta_complex();
    const auto sel = selection_from_sheets(p, {"D1", "D2"});
    CHECK(check_selection(p, sel).ok());
    CHECK(selection_euler(p, sel) == 2);
    CHECK(surface_orientability(p, sel) == SurfaceType{true, 0});
    const auto bad = selection_from_sheets(p, {"D1"});
    CHECK_FALSE(check_selection(p, bad).ok());
  }

  TEST_CASE("a crosscap sheet gives a non-orientable surface") {
    const auto p = closed_surface("P", false, 1);
    const auto s = find_closed_surfaces(p, 100);
    REQUIRE(s.selections.size() == 1);
    CHECK_FALSE(s.selections[0].orientable);
    CHECK(surface_orientability(p, s.selections[0]) == SurfaceType{false, 1});
  }

  TEST_CASE("surface search respects its bound") {
    const auto s = find_closed_surfaces(build_example_wfprime().polyhedron, 1);
    CHECK(s.truncated);
  }

  TEST_CASE("vertex continuation is an involution") {
    VertexSpec v;
    v.id = "v";
    v.roles = {SlotRoles{0, 1, 2}, SlotRoles{2, 0, 1}, SlotRoles{1, 2, 0}, SlotRoles{0, 2, 1}};
    for (int port = 0; port < 4; ++port)
      for (int slot = 0; slot < 3; ++slot) {
        const PortSlot to = continue_at_vertex(v, port, slot);
        CHECK(to.port != port);
        const PortSlot back = continue_at_vertex(v, to.port, to.slot);
        CHECK(back == PortSlot{port, slot});
      }
  }

  TEST_CASE("free wings run straight and q wings turn") {
    VertexSpec v;
    const PortSlot a = continue_at_vertex(v, kPortA1, v.roles[kPortA1].free_slot);
    CHECK(a.port == kPortA2);
    const PortSlot b = continue_at_vertex(v, kPortA1, v.roles[kPortA1].q_left);
    CHECK((b.port == kPortB1 || b.port == kPortB2));
  }

  TEST_CASE("slot roles") {
    SlotRoles r{2, 0, 1};
    CHECK(r.is_permutation());
    CHECK(r.role_of(2) == WingRole::Free);
    CHECK(r.slot_of(WingRole::QRight) == 1);
    CHECK_FALSE(SlotRoles{1, 1, 2}.is_permutation());
  }

  TEST_CASE("wing cycles reproduce the sheet circuits") {
    const auto p = build_example_wf().polyhedron;
    int circuits = 0;
    for (const auto& s : p.sheets) circuits += static_cast<int>(s.circuits.size());
    CHECK(static_cast<int>(trace_wing_cycles(p).size()) == circuits);
  }
}
