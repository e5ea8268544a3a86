#pragma once

#include <string>

#include "xtop/poset.hpp"
#include "xtop/space.hpp"

namespace xtop {

// Hasse diagram as a Graphviz digraph, edges from smaller to larger element,
// one rank row per height.
std::string hasse_dot(const FinitePoset& p, const std::string& graph_name = "poset");

// Specialization order of the space. With closed_sets, the closed family is
// listed in a legend node.
std::string space_dot(const XTopSpace& s, bool closed_sets = false);

}  // namespace xtop
