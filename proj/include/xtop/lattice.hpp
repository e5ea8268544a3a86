#pragma once

#include <memory>
#include <span>
#include <vector>

#include "xtop/element_set.hpp"
#include "xtop/poset.hpp"

namespace xtop {

// Finite bounded lattice. Finite lattices are complete, so meet_all/join_all
// accept any subset; the empty meet is top and the empty join is bottom.
class FiniteLattice {
public:
    // Derives meet and join by exhaustive glb/lub search.
    // Throws NotALatticeError naming a pair without glb or lub.
    static FiniteLattice from_poset(FinitePoset order);

    // Validates that the tables are the glb/lub of `order`.
    static FiniteLattice from_tables(FinitePoset order, std::vector<Index> meet, std::vector<Index> join);

    std::size_t size() const noexcept { return order_.size(); }
    const FinitePoset& order() const noexcept { return order_; }
    const std::string& label(Index a) const { return order_.label(a); }
    Index index_of(std::string_view label) const { return order_.index_of(label); }

    bool leq(Index a, Index b) const noexcept { return order_.leq(a, b); }
    Index meet(Index a, Index b) const noexcept { return meet_[a * size() + b]; }
    Index join(Index a, Index b) const noexcept { return join_[a * size() + b]; }
    Index bottom() const noexcept { return bottom_; }
    Index top() const noexcept { return top_; }

    Index meet_all(const ElementSet& s) const;
    Index meet_all(std::span<const Index> s) const;
    Index join_all(const ElementSet& s) const;

    const std::vector<Index>& meet_table() const noexcept { return meet_; }
    const std::vector<Index>& join_table() const noexcept { return join_; }

private:
    FiniteLattice(FinitePoset order, std::vector<Index> meet, std::vector<Index> join);

    FinitePoset order_;
    std::vector<Index> meet_;
    std::vector<Index> join_;
    Index bottom_ = 0;
    Index top_ = 0;
};

// Lattice-axiom checker used by validation and tests: commutativity,
// associativity, idempotence, absorption and order agreement. Returns an
// empty string when all hold, else the first violated law with witnesses.
std::string lattice_axiom_violation(const FiniteLattice& l);

// Subset X of L \ {top}.
class EmbeddedSubset {
public:
    EmbeddedSubset(std::shared_ptr<const FiniteLattice> lattice, ElementSet members);

    const FiniteLattice& lattice() const noexcept { return *lattice_; }
    const std::shared_ptr<const FiniteLattice>& lattice_ptr() const noexcept { return lattice_; }
    const ElementSet& members() const noexcept { return members_; }

    // Max(X), Min(X) in the order inherited from L.
    ElementSet maximal() const;
    ElementSet minimal() const;

private:
    std::shared_ptr<const FiniteLattice> lattice_;
    ElementSet members_;
};

struct UpsetLattice {
    std::shared_ptr<const FiniteLattice> lattice;
    // embedding[x] is the lattice index of the principal up-set of x.
    std::vector<Index> embedding;
    // upsets[i] is the up-set (over the source poset) behind lattice index i.
    std::vector<ElementSet> upsets;
};

// Up-sets of P ordered by reverse inclusion: meet = union, join = intersection,
// top = empty set, bottom = all of P. Principal up-sets carry the label of
// their generator; other up-sets are labelled "up{g1,g2,...}" by their minimal
// generators.
UpsetLattice upset_lattice(const FinitePoset& p);

bool is_distributive(const FiniteLattice& l);

// For every q in Max(X): meet_all(Max(X) \ {q}) is not below q.
bool has_complete_max_property(const EmbeddedSubset& x);

// Every a in A lies above some element of Min(X) / below some element of Max(X).
// Throws SubsetViolationError unless X ⊆ A.
bool is_atomic(const EmbeddedSubset& x, const ElementSet& a);
bool is_coatomic(const EmbeddedSubset& x, const ElementSet& a);

}  // namespace xtop
