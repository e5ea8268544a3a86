#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "xtop/element_set.hpp"

namespace xtop {

// Finite partial order over dense indices 0..n-1 with distinct labels.
// The full relation matrix is stored; all values are immutable.
class FinitePoset {
public:
    // Order is the reflexive-transitive closure of `pairs` (first <= second).
    static FinitePoset from_relation(std::vector<std::string> labels,
                                     const std::vector<std::pair<std::string, std::string>>& pairs);
    // Same, with pairs given by index.
    static FinitePoset from_index_pairs(std::vector<std::string> labels,
                                        const std::vector<std::pair<Index, Index>>& pairs);
    // `leq` is an n*n row-major matrix; closure is applied before validation.
    static FinitePoset from_matrix(std::vector<std::string> labels, std::vector<char> leq);

    std::size_t size() const noexcept { return labels_.size(); }
    bool empty() const noexcept { return labels_.empty(); }

    const std::string& label(Index i) const;
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    Index index_of(std::string_view label) const;
    bool has_label(std::string_view label) const;

    bool leq(Index a, Index b) const noexcept { return leq_[a * size() + b] != 0; }
    bool lt(Index a, Index b) const noexcept { return a != b && leq(a, b); }
    bool comparable(Index a, Index b) const noexcept { return leq(a, b) || leq(b, a); }
    bool incomparable(Index a, Index b) const noexcept { return !comparable(a, b); }

    // ↑x and ↓x, both containing x.
    const ElementSet& up_set(Index x) const { return up_.at(x); }
    const ElementSet& down_set(Index x) const { return down_.at(x); }

    const std::vector<char>& matrix() const noexcept { return leq_; }

    // Order restricted to `subset`; element order follows ascending index.
    FinitePoset induced(const ElementSet& subset) const;

    // Pairs (a, b) with a covered by b.
    std::vector<std::pair<Index, Index>> covers() const;
    // All pairs a <= b, a != b.
    std::vector<std::pair<Index, Index>> strict_pairs() const;

private:
    FinitePoset(std::vector<std::string> labels, std::vector<char> leq);

    std::vector<std::string> labels_;
    std::vector<char> leq_;
    std::vector<ElementSet> up_;
    std::vector<ElementSet> down_;
    std::unordered_map<std::string, Index> by_label_;
};

FinitePoset antichain(std::size_t n);
// k elements x0 < ... < x_{k-1}; chain(2) is the two-element chain.
FinitePoset chain(std::size_t k);
// One maximal element "m" over minimals "a1".."an".
FinitePoset tree(std::size_t n);
// One minimal element "b" under maximals "m1".."mm".
FinitePoset dual_tree(std::size_t m);

struct ForestComponent {
    enum class Kind { Tree, DualTree, Chain };
    Kind kind;
    std::size_t n;
    friend bool operator==(const ForestComponent&, const ForestComponent&) = default;
};

using ForestSpec = std::vector<ForestComponent>;

FinitePoset component_poset(const ForestComponent& c);
// Disjoint union; component j (1-based) labels get the suffix "#j".
FinitePoset forest(const ForestSpec& spec);
FinitePoset disjoint_union(const std::vector<FinitePoset>& parts);

std::size_t height(const FinitePoset& p, Index x);
std::vector<std::size_t> heights(const FinitePoset& p);
std::size_t krull_dim(const FinitePoset& p);

struct Extremes {
    ElementSet minimal;
    ElementSet maximal;
};
Extremes extremes(const FinitePoset& p);

// All up-closed subsets, including the empty and full set, sorted canonically.
std::vector<ElementSet> upsets(const FinitePoset& p);

// Connected components of the comparability graph, ordered by smallest member.
std::vector<ElementSet> order_components(const FinitePoset& p);

// Isomorphism-invariant key; exact for posets up to ~10 elements.
std::vector<std::uint64_t> canonical_form(const FinitePoset& p);
bool is_isomorphic(const FinitePoset& a, const FinitePoset& b);

// Recognizes a poset as a forest of chains, trees and dual trees.
// Returns true and fills `out` (components sorted, chains C1/C2 preferred over
// T1/V1) when every order component has one of these shapes.
bool recognize_forest(const FinitePoset& p, ForestSpec& out);

// Forest spec string when recognized, else "poset(n=..,kdim=..)".
std::string describe_shape(const FinitePoset& p);

}  // namespace xtop
