#pragma once

#include <string>

#include "ipd/polygon.hpp"
#include "ipd/poset.hpp"

namespace ipd {

/// Graphviz digraph of the Hasse diagram: one node per interval, one edge per cover, parent
/// to child. `ordering=out` keeps each node's children left to right by ascending minimum.
std::string poset_to_dot(const IntervalPoset& poset);

/// SVG 1.1 chord diagram. Vertex 1 sits at the top (90 degrees) and labels run clockwise on a
/// circle of fixed radius. Requires m >= 3.
std::string dissection_to_svg(const Dissection& d);

}  // namespace ipd
