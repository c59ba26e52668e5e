#pragma once

#include <map>
#include <set>
#include <string>

#include "spine/surgery.hpp"

namespace spine::detail {

// Wing lookups on the base polyhedron.
const WingRef* wing_of(const SimplePolyhedron& p, const BranchArc& arc, int slot);

std::set<std::string> image_curves(const SurgeryPlan& plan);

// Base arc carried by each base edge.
std::map<std::string, std::string> edge_to_arc(const BornMap& c);

}  // namespace spine::detail
