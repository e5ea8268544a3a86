#pragma once

#include <vector>

#include "xtop/lattice.hpp"
#include "xtop/poset.hpp"

namespace xtop {

// One representative per isomorphism class of n-element posets.
std::vector<FinitePoset> posets_up_to_iso(std::size_t n);

// One representative per isomorphism class of n-element lattices (n >= 1).
// Built by adjoining a bottom and a top to every (n-2)-element poset.
std::vector<FiniteLattice> lattices_up_to_iso(std::size_t n);

// Multisets of components with the allowed kinds, each of size index at
// least min_n, whose total element count is between 1 and max_total.
// A tree or dual tree of index n has n+1 elements; a chain Ck has k.
std::vector<ForestSpec> forests_up_to(std::size_t max_total, const std::vector<ForestComponent::Kind>& kinds,
                                      std::size_t min_n = 1);

std::size_t element_count(const ForestComponent& c);
std::size_t element_count(const ForestSpec& spec);

}  // namespace xtop
