#pragma once

#include <string>
#include <vector>

#include "spine/born_map.hpp"
#include "spine/obstruction.hpp"

namespace spine {

// Draws every curve as a circle. Curves with DECOR hints use them; the rest
// are placed by nesting depth. Boundary curves are black, Triple curves gray
// and auxiliary curves dashed. Each face gets one count label.
std::string render_svg(const BornMap& c);

// One undirected multigraph; vertices are sheet ids, edges carry the arc id
// and the parity.
std::string graph_dot(const IncidenceGraph& g);
std::string graphs_dot(const std::vector<IncidenceGraph>& graphs);

}  // namespace spine
