#include <doctest.h>

#include <filesystem>
#include <functional>
#include <regex>

#include "spine/gallery.hpp"
#include "spine/io.hpp"
#include "spine/render.hpp"
#include "support/random_models.hpp"

using namespace spine;

namespace {

int occurrences(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

BornMap round_trip(const BornMap& c) {
  return parse_born_map(emit_spoly(c.polyhedron), emit_arr(c.arrangement, c.arc_to_edge, c.vertex_to_crossing));
}

std::string parse_error(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    CHECK(e.code() == "ParseError");
    return e.what();
  }
  FAIL("expected a parse error");
  return "";
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("born maps survive emit and parse") {
    for (const auto& c : {build_example_wf(), build_example_wfprime(), theta_born_map(), empty_born_map()})
      CHECK(round_trip(c) == c);
  }

  TEST_CASE("random born maps survive emit and parse") {
    spine::testing::Rng rng(spine::testing::suite_seed() + 31);
    for (int i = 0; i < 100; ++i) {
      const auto c = spine::testing::random_born_map(rng, true);
      CHECK(round_trip(c) == c);
    }
  }

  TEST_CASE("an invalid polyhedron still round trips") {
    const auto p = broken_polyhedron();
    CHECK(parse_spoly(emit_spoly(p)) == p);
  }

  TEST_CASE("plans survive emit and parse") {
    for (const auto& plan : {example_klein_plan(), example_twin_plan(), example_relocation_plan()}) {
      const auto text = emit_plan(plan, "wf.spoly", "wf.arr");
      CHECK(parse_plan(text, plan.base) == plan);
      CHECK(emit_plan(parse_plan(text, plan.base), "wf.spoly", "wf.arr") == text);
    }
    spine::testing::Rng rng(spine::testing::suite_seed() + 32);
    for (int i = 0; i < 50; ++i) {
      const auto rp = spine::testing::random_plan(rng, spine::testing::random_round(rng));
      CHECK(parse_plan(emit_plan(rp.plan), rp.plan.base) == rp.plan);
    }
  }

  TEST_CASE("comments and blank lines are ignored") {
    const auto text = "# heading\n\nNAME t   # trailing\nSHEETS\n  F o 1\n# done\n";
    const auto p = parse_spoly(text);
    CHECK(p.name == "t");
    REQUIRE(p.sheets.size() == 1);
    CHECK(p.sheets[0].genus == 1);
  }

  TEST_CASE("parse errors carry line numbers") {
    CHECK(parse_error([] { parse_spoly("NAME x\nSHEETS\nF q 0\n"); }).find("line 3") != std::string::npos);
    CHECK(parse_error([] { parse_spoly("NAME x\nBOGUS\n"); }).find("line 2") != std::string::npos);
    CHECK(parse_error([] { parse_arr("NAME a\nFACES\nf0 zero UNBOUNDED\n"); }).find("line 3") != std::string::npos);
    CHECK(parse_error([] { parse_arr("NAME a\nEDGES\ne c x\n"); }).find("line 3") != std::string::npos);
    const auto base = build_example_wf();
    parse_error([&] { parse_plan("NAME p\nPATCH S o 0 1\n", base); });
    CHECK(parse_error([&] { parse_plan("NAME p\nPATCH S o zero 1\n", base); }).find("line 2") != std::string::npos);
  }

  TEST_CASE("atomic writes replace the target") {
    const auto dir = std::filesystem::temp_directory_path() / "spine_io_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "out.txt").string();
    write_file_atomic(path, "first");
    write_file_atomic(path, "second");
    CHECK(read_file(path) == "second");
    CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
    std::filesystem::remove_all(dir);
    CHECK_THROWS_AS(read_file((dir / "missing").string()), Error);
  }
}

TEST_SUITE("render") {
  TEST_CASE("concentric example") {
    const auto svg = render_svg(build_example_wf());
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(occurrences(svg, "<circle class=\"curve\"") == 6);
    CHECK(occurrences(svg, "<text class=\"count\"") == 7);
    CHECK(occurrences(svg, "stroke=\"black\"") == 2);
    CHECK(occurrences(svg, "stroke=\"gray\"") == 4);
  }

  TEST_CASE("surgered example") {
    const auto svg = render_svg(build_example_wfprime());
    CHECK(occurrences(svg, "<circle class=\"curve\"") == 8);
    CHECK(occurrences(svg, "<text class=\"count\"") == 9);
  }

  TEST_CASE("empty map has one zero label") {
    const auto svg = render_svg(empty_born_map());
    CHECK(occurrences(svg, "<circle class=\"curve\"") == 0);
    CHECK(occurrences(svg, "<text class=\"count\"") == 1);
    CHECK(std::regex_search(svg, std::regex("<text class=\"count\"[^>]*>0</text>")));
  }

  TEST_CASE("maps without drawing hints are laid out by nesting") {
    auto c = build_example_wfprime();
    c.arrangement.decor.clear();
    const auto svg = render_svg(c);
    CHECK(occurrences(svg, "<circle class=\"curve\"") == 8);
    CHECK(occurrences(svg, "<text class=\"count\"") == 9);
    CHECK(svg == render_svg(c));
  }

  TEST_CASE("graph output") {
    IncidenceGraph g{"D", {"a", "b"}, {{"x", "a", "b", -1}}};
    const auto dot = graph_dot(g);
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("\"a\" -- \"b\"") != std::string::npos);
    const auto both = graphs_dot({g, g});
    CHECK(occurrences(both, "--") == 2);
  }
}
