#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "xtop/element_set.hpp"
#include "xtop/lattice.hpp"
#include "xtop/poset.hpp"

namespace xtop {

// V(a) = {x in X : a <= x}.
ElementSet variety(const FiniteLattice& l, const ElementSet& x, Index a);
// D(a) = X \ V(a).
ElementSet covariety(const FiniteLattice& l, const ElementSet& x, Index a);

struct RadicalInfo {
    // Elements a with a = meet of V(a).
    ElementSet radical_elements;
    // radical_of[a] = meet of V(a).
    std::vector<Index> radical_of;
};

RadicalInfo radical_info(const FiniteLattice& l, const ElementSet& x);

// First pair (a, b) in index order with V(a) ∪ V(b) not a variety.
std::optional<std::pair<Index, Index>> find_union_failure(const FiniteLattice& l, const ElementSet& x);

// Varieties closed under pairwise (hence finite) unions.
bool is_xtop_by_unions(const FiniteLattice& l, const ElementSet& x);

// Every x in X strongly irreducible in the radical elements: for radical a, b
// with a ∧ b <= x, a <= x or b <= x. Radical elements are closed under meets,
// so by induction on |A| the pairwise condition gives it for all finite A;
// the empty meet is top, which is never below a point of X.
bool is_xtop_by_irreducibility(const FiniteLattice& l, const ElementSet& x);

struct ExcludedMeet {
    Index e_x;     // meet of X \ {x}
    Index d_meet;  // meet of D(x)
    bool is_excluded;
};

// Zariski-like space on X ⊆ L \ {1}: closed sets are the varieties V(a).
// Points are lattice indices; all point sets are sets of lattice indices.
class XTopSpace {
public:
    // Throws NotXTopError with a witness pair when varieties are not union-closed.
    static XTopSpace build(std::shared_ptr<const FiniteLattice> l, ElementSet x);
    static XTopSpace build(const EmbeddedSubset& x) { return build(x.lattice_ptr(), x.members()); }

    // Alexandrov space of P: closed sets are exactly the up-sets. Point labels
    // are the element labels of P.
    static XTopSpace from_poset(const FinitePoset& p);

    const FiniteLattice& lattice() const noexcept { return *lattice_; }
    const std::shared_ptr<const FiniteLattice>& lattice_ptr() const noexcept { return lattice_; }
    const ElementSet& points() const noexcept { return points_; }
    const std::vector<Index>& point_list() const noexcept { return point_list_; }
    std::size_t point_count() const noexcept { return point_list_.size(); }
    const std::string& label(Index x) const { return lattice_->label(x); }
    Index point(std::string_view label) const;

    const ElementSet& variety(Index a) const;
    ElementSet covariety(Index a) const;

    // Deduplicated, canonical order.
    const std::vector<ElementSet>& closed_family() const noexcept { return closed_; }
    const std::vector<ElementSet>& open_family() const noexcept { return open_; }
    bool is_closed_set(const ElementSet& y) const;
    bool is_open_set(const ElementSet& y) const;

    // V(meet_all(Y)). Throws SubsetViolationError unless Y ⊆ X.
    ElementSet closure(const ElementSet& y) const;
    // X \ closure(X \ Y).
    ElementSet interior(const ElementSet& y) const;
    // Intersection of all opens containing x.
    ElementSet kernel(Index x) const;
    ExcludedMeet excluded_meet(Index x) const;
    // Same lattice, X replaced by Y.
    XTopSpace subspace(const ElementSet& y) const;

    // Specialization order on X (x <= y iff y in closure({x})), as a poset
    // whose element i is point_list()[i].
    FinitePoset specialization_poset() const;

private:
    XTopSpace() = default;
    void require_point(Index x) const;
    void require_subset(const ElementSet& y) const;

    std::shared_ptr<const FiniteLattice> lattice_;
    ElementSet points_;
    std::vector<Index> point_list_;
    std::vector<ElementSet> varieties_;
    std::vector<ElementSet> closed_;
    std::vector<ElementSet> open_;
};

}  // namespace xtop
