#include <doctest.h>

#include <algorithm>
#include <random>

#include "spine/gallery.hpp"
#include "support/random_models.hpp"

using namespace spine;

namespace {

CurveArrangement two_disjoint_circles() {
  CurveArrangement a = empty_arrangement(0, "f0");
  add_loop_in_face(a, "f0", "A", "aux:A");
  add_loop_in_face(a, "f0", "B", "aux:B");
  return a;
}

CurveArrangement lens() {
  CurveArrangement a = empty_arrangement(0, "f0");
  add_loop_in_face(a, "f0", "A", "aux:A");
  add_lens_across_loop(a, "A.e", "B", "aux:B");
  return a;
}

CurveArrangement figure_eight() {
  CurveArrangement a;
  a.name = "eight";
  a.faces = {{"out", 0, true}, {"L", 0, false}, {"R", 0, false}};
  a.curves = {{"F", "aux:F", {"e1", "e2"}}};
  a.edges = {{"e1", "F", "x", "x", "out", "R"}, {"e2", "F", "x", "x", "L", "out"}};
  a.crossings = {{"x", {{"e1", false}, {"e2", false}, {"e2", true}, {"e1", true}}}};
  return a;
}

// Faces around a crossing in counter-clockwise order.
std::vector<std::string> faces_around(const CurveArrangement& a, const Crossing& x) {
  std::vector<std::string> out;
  for (const auto& end : x.ends) {
    const ArrEdge* e = a.find_edge(end.edge);
    out.push_back(end.head ? e->right : e->left);
  }
  return out;
}

// Renames every face and edge and shuffles the listing order.
BornMap shuffled(const BornMap& c, spine::testing::Rng& rng) {
  BornMap out = c;
  auto& a = out.arrangement;
  std::map<std::string, std::string> face, edge;
  std::vector<int> perm(a.faces.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (std::size_t i = 0; i < a.faces.size(); ++i) face[a.faces[i].id] = "F" + std::to_string(perm[i]);
  perm.assign(a.edges.size(), 0);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (std::size_t i = 0; i < a.edges.size(); ++i) edge[a.edges[i].id] = "E" + std::to_string(perm[i]);
  for (auto& f : a.faces) f.id = face.at(f.id);
  for (auto& e : a.edges) {
    e.id = edge.at(e.id);
    e.left = face.at(e.left);
    e.right = face.at(e.right);
  }
  for (auto& cv : a.curves)
    for (auto& e : cv.edges) e = edge.at(e);
  for (auto& x : a.crossings)
    for (auto& end : x.ends) end.edge = edge.at(end.edge);
  for (auto& [arc, e] : out.arc_to_edge) e = edge.at(e);
  std::shuffle(a.faces.begin(), a.faces.end(), rng);
  std::shuffle(a.edges.begin(), a.edges.end(), rng);
  std::shuffle(a.curves.begin(), a.curves.end(), rng);
  std::shuffle(out.polyhedron.sheets.begin(), out.polyhedron.sheets.end(), rng);
  return out;
}

}  // namespace

TEST_SUITE("plane-map") {
  TEST_CASE("two disjoint circles bound three faces") {
    const auto a = two_disjoint_circles();
    CHECK(validate_arrangement(a).ok());
    CHECK(a.faces.size() == 3);
    CHECK(a.crossings.empty());
    CHECK(curve_components(a) == 2);
  }

  TEST_CASE("a lens has four faces and two crossings") {
    const auto a = lens();
    const auto r = validate_arrangement(a);
    CHECK_MESSAGE(r.ok(), r.to_text());
    CHECK(a.faces.size() == 4);
    CHECK(a.crossings.size() == 2);
    CHECK(crossings_between(a, "A", "B").size() == 2);
    CHECK(curve_components(a) == 1);
    CHECK(faces_inside(a, "B") == std::set<std::string>{"B.fl", "B.fr"});
  }

  TEST_CASE("figure eight") {
    const auto a = figure_eight();
    const auto r = validate_arrangement(a);
    CHECK_MESSAGE(r.ok(), r.to_text());
    CHECK(crossings_between(a, "F", "F").size() == 1);
    const auto w = face_winding(a, {{"F", 1}});
    CHECK(w.at("out") == 0);
    CHECK(w.at("L") == 1);
    CHECK(w.at("R") == -1);
  }

  TEST_CASE("a crossing with three ends is not four-valent") {
    auto a = figure_eight();
    a.crossings[0].ends.pop_back();
    CHECK(validate_arrangement(a).has("NotFourValent"));
  }

  TEST_CASE("wrong face count breaks the Euler formula") {
    auto a = two_disjoint_circles();
    a.faces.push_back({"extra", 0, false});
    CHECK_FALSE(validate_arrangement(a).ok());
  }

  TEST_CASE("example born maps validate") {
    for (const auto& c : {build_example_wf(), build_example_wfprime(), theta_born_map(), empty_born_map()}) {
      const auto r = validate_born_map(c);
      CHECK_MESSAGE(r.ok(), r.to_text());
    }
  }

  TEST_CASE("a jump of two across an edge is caught") {
    auto wf = build_example_wf();
    wf.arrangement.find_face("d3")->count = 5;
    const auto r = validate_born_map(wf);
    CHECK(r.has("CrossingRule"));
    CHECK_THROWS_AS(require_valid(wf), Error);
  }

  TEST_CASE("region counts of the concentric example") {
    const auto counts = region_counts(build_example_wf());
    const std::vector<int> want{4, 5, 4, 3, 2, 1, 0};
    for (int i = 0; i < 7; ++i) CHECK(counts.at("d" + std::to_string(6 - i)) == want[static_cast<std::size_t>(i)]);
  }

  TEST_CASE("realizability certificate") {
    const auto wf = build_example_wf();
    const auto cert = realizability_certificate(wf, 3);
    CHECK(cert.dimension == 3);
    CHECK(cert.singular_components == 6);
    CHECK_FALSE(cert.statement.empty());
    CHECK(realizability_certificate(theta_born_map(), 4).singular_components == 1);
    try {
      realizability_certificate(wf, 2);
      FAIL("expected DimensionTooLow");
    } catch (const Error& e) {
      CHECK(e.code() == "DimensionTooLow");
    }
  }

  TEST_CASE("crossing counts satisfy the sum rule") {
    spine::testing::Rng rng(spine::testing::suite_seed() + 11);
    int crossings = 0;
    for (int i = 0; i < 60; ++i) {
      const auto c = spine::testing::random_born_map(rng, true);
      for (const auto& x : c.arrangement.crossings) {
        const auto f = faces_around(c.arrangement, x);
        int n[4];
        for (int k = 0; k < 4; ++k) n[k] = c.arrangement.find_face(f[static_cast<std::size_t>(k)])->count;
        CHECK(n[0] + n[2] == n[1] + n[3]);
        ++crossings;
      }
    }
    CHECK(crossings > 0);
  }

  TEST_CASE("vertices correspond to branch crossings") {
    spine::testing::Rng rng(spine::testing::suite_seed() + 12);
    for (int i = 0; i < 60; ++i) {
      const auto c = spine::testing::random_born_map(rng, true);
      CHECK(c.polyhedron.vertices.size() == c.arrangement.crossings.size());
      CHECK(c.vertex_to_crossing.size() == c.polyhedron.vertices.size());
    }
  }

  TEST_CASE("validation is invariant under relabeling") {
    spine::testing::Rng rng(spine::testing::suite_seed() + 13);
    for (int i = 0; i < 40; ++i) {
      const auto c = spine::testing::random_born_map(rng, true);
      const auto s = shuffled(c, rng);
      CHECK(validate_born_map(s).ok());
      CHECK(canonical_form(s) == canonical_form(c));
      auto broken = s;
      auto& face = broken.arrangement.faces.front();
      face.count += 2;
      CHECK_FALSE(validate_born_map(broken).ok());
    }
  }

  TEST_CASE("canonical form separates different maps") {
    CHECK_FALSE(canonical_form(build_example_wf()) == canonical_form(build_example_wfprime()));
    CHECK(canonical_form(build_example_wf()) == canonical_form(build_example_wf()));
  }

  TEST_CASE("port positions are a permutation") {
    std::set<int> seen;
    for (int p = 0; p < 4; ++p) seen.insert(port_position(p));
    CHECK(seen == std::set<int>{0, 1, 2, 3});
    CHECK(port_position(kPortA1) == 0);
    CHECK(port_position(kPortA2) == 2);
  }
}
