#include <doctest.h>

#include <functional>

#include "spine/cell_complex.hpp"
#include "spine/gallery.hpp"
#include "support/criteria.hpp"
#include "support/oracles.hpp"
#include "support/random_models.hpp"

using namespace spine;
using namespace spine::testing;

namespace {

void require_pass(const CriterionResult& r) { CHECK_MESSAGE(r.pass, r.name << ": " << r.detail); }

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("concentric example") { require_pass(concentric_reproduction()); }
  TEST_CASE("annulus surgery") { require_pass(surgery_reproduction()); }
  TEST_CASE("Klein bottle") { require_pass(klein_detection()); }
  TEST_CASE("no maximal graph for the Klein disks") { require_pass(criterion_inapplicable()); }
  TEST_CASE("Euler characteristic is additive under surgery") { require_pass(euler_additivity(200)); }
  TEST_CASE("library agrees with exhaustive oracles") { require_pass(oracle_equivalence(200)); }
  TEST_CASE("crossing rule holds and injected jumps are caught") { require_pass(crossing_rule(200)); }
  TEST_CASE("summand count") { require_pass(heegaard_summands()); }

  TEST_CASE("Euler characteristic from face counts on planar maps") {
    Rng rng(suite_seed() + 3);
    for (int i = 0; i < 200; ++i) {
      const auto c = random_born_map(rng, false);
      CHECK(euler_from_counts(c) == euler_characteristic(c.polyhedron));
    }
    CHECK(euler_from_counts(build_example_wf()) == 4);
  }

  TEST_CASE("surgered maps stay valid and attach idempotently") {
    Rng rng(suite_seed() + 4);
    for (int i = 0; i < 200; ++i) {
      const auto rp = random_plan(rng, random_round(rng));
      const auto r = check_mt1_hypotheses(rp.plan);
      REQUIRE_MESSAGE(r.ok(), r.to_text());
      const auto res = attach_surface_report(rp.plan);
      CHECK(validate_born_map(res.map).ok());
      CHECK(res.new_vertices == 2 * rp.lenses);
      CHECK(res.map == attach_surface(rp.plan));
      const auto betti = z2_homology(res.map.polyhedron);
      CHECK(betti.b0 - betti.b1 + betti.b2 == euler_characteristic(res.map.polyhedron));
    }
  }

  TEST_CASE("connected components match the zeroth Betti number") {
    Rng rng(suite_seed() + 5);
    for (int i = 0; i < 200; ++i) {
      const auto c = random_born_map(rng, true);
      const auto& p = c.polyhedron;
      std::map<std::string, std::string> parent;
      std::function<std::string(const std::string&)> root = [&](const std::string& x) {
        return parent[x] == x ? x : parent[x] = root(parent[x]);
      };
      for (const auto& sh : p.sheets) parent[sh.id] = sh.id;
      for (const auto& arc : p.arcs)
        for (const auto& flag : arc.slots) parent[root(flag.sheet)] = root(arc.slots.front().sheet);
      std::set<std::string> roots;
      for (const auto& sh : p.sheets) roots.insert(root(sh.id));
      CHECK(z2_homology(p).b0 == static_cast<int>(roots.size()));
    }
  }
}
