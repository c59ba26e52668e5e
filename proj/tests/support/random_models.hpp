#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "spine/gallery.hpp"

namespace spine::testing {

// Seed for the randomized suites: SPINE_FORGE_SEED when set, else a constant.
std::uint64_t suite_seed();

using Rng = std::mt19937_64;

// A concentric family of 1 to `max_circles` circles with random kinds and
// layer choices. With `vary_sheets` some sheets get random genus or crosscaps.
RoundReeb random_round(Rng& rng, int max_circles = 6, bool vary_sheets = true);

struct RandomPlan {
  SurgeryPlan plan;
  int loops = 0;
  int lenses = 0;  // circles crossing one triple circle twice
};

// Circles that are either crossing-free loops in one face or lenses across
// a triple circle, all with the patch on their left.
RandomPlan random_plan(Rng& rng, const RoundReeb& base, int max_circles = 3);

// A round family, surgered by a random plan half of the time. Without
// `vary_sheets` every sheet is planar and the plan attaches one disk.
BornMap random_born_map(Rng& rng, bool vary_sheets = true);

}  // namespace spine::testing
