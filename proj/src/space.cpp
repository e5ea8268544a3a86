#include "xtop/space.hpp"

#include <algorithm>
#include <unordered_set>

#include "xtop/errors.hpp"

namespace xtop {

namespace {

void require_index(const FiniteLattice& l, Index a) {
    if (a >= l.size()) throw IndexError("lattice index " + std::to_string(a) + " out of range");
}

std::vector<ElementSet> all_varieties(const FiniteLattice& l, const ElementSet& x) {
    std::vector<ElementSet> v(l.size());
    for (Index a = 0; a < l.size(); ++a) v[a] = x & l.order().up_set(a);
    return v;
}

}  // namespace

ElementSet variety(const FiniteLattice& l, const ElementSet& x, Index a) {
    require_index(l, a);
    return x & l.order().up_set(a);
}

ElementSet covariety(const FiniteLattice& l, const ElementSet& x, Index a) {
    require_index(l, a);
    return x - l.order().up_set(a);
}

RadicalInfo radical_info(const FiniteLattice& l, const ElementSet& x) {
    RadicalInfo info;
    info.radical_of.resize(l.size());
    for (Index a = 0; a < l.size(); ++a) {
        const Index r = l.meet_all(x & l.order().up_set(a));
        info.radical_of[a] = r;
        if (r == a) info.radical_elements.insert(a);
    }
    return info;
}

std::optional<std::pair<Index, Index>> find_union_failure(const FiniteLattice& l, const ElementSet& x) {
    const auto v = all_varieties(l, x);
    std::unordered_set<ElementSet, ElementSetHash> family(v.begin(), v.end());
    for (Index a = 0; a < l.size(); ++a) {
        for (Index b = a + 1; b < l.size(); ++b) {
            if (!family.contains(v[a] | v[b])) return std::make_pair(a, b);
        }
    }
    return std::nullopt;
}

bool is_xtop_by_unions(const FiniteLattice& l, const ElementSet& x) {
    return !find_union_failure(l, x).has_value();
}

bool is_xtop_by_irreducibility(const FiniteLattice& l, const ElementSet& x) {
    const auto radicals = radical_info(l, x).radical_elements.elements();
    bool ok = true;
    x.for_each([&](Index p) {
        if (!ok) return;
        for (std::size_t i = 0; i < radicals.size() && ok; ++i) {
            const Index a = radicals[i];
            if (l.leq(a, p)) continue;
            for (std::size_t j = i + 1; j < radicals.size(); ++j) {
                const Index b = radicals[j];
                if (!l.leq(b, p) && l.leq(l.meet(a, b), p)) {
                    ok = false;
                    break;
                }
            }
        }
    });
    return ok;
}

XTopSpace XTopSpace::build(std::shared_ptr<const FiniteLattice> l, ElementSet x) {
    const EmbeddedSubset checked(l, x);
    if (auto bad = find_union_failure(*l, x)) {
        throw NotXTopError(bad->first, bad->second,
                           "V(" + l->label(bad->first) + ") ∪ V(" + l->label(bad->second) +
                               ") is not a variety");
    }
    XTopSpace s;
    s.lattice_ = std::move(l);
    s.points_ = std::move(x);
    s.point_list_ = s.points_.elements();
    s.varieties_ = all_varieties(*s.lattice_, s.points_);

    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (const auto& v : s.varieties_) {
        if (seen.insert(v).second) s.closed_.push_back(v);
    }
    sort_canonical(s.closed_);
    for (const auto& c : s.closed_) s.open_.push_back(s.points_ - c);
    sort_canonical(s.open_);
    return s;
}

XTopSpace XTopSpace::from_poset(const FinitePoset& p) {
    UpsetLattice u = upset_lattice(p);
    ElementSet x = ElementSet::from_range(u.embedding);
    return build(u.lattice, std::move(x));
}

Index XTopSpace::point(std::string_view label) const {
    const Index i = lattice_->index_of(label);
    if (!points_.contains(i)) throw ParseError("'" + std::string(label) + "' is not a point of X");
    return i;
}

void XTopSpace::require_point(Index x) const {
    if (!points_.contains(x)) throw IndexError("index " + std::to_string(x) + " is not a point of X");
}

void XTopSpace::require_subset(const ElementSet& y) const {
    if (!y.is_subset_of(points_)) throw SubsetViolationError("set is not contained in X");
}

const ElementSet& XTopSpace::variety(Index a) const {
    require_index(*lattice_, a);
    return varieties_[a];
}

ElementSet XTopSpace::covariety(Index a) const { return points_ - variety(a); }

bool XTopSpace::is_closed_set(const ElementSet& y) const {
    return std::binary_search(closed_.begin(), closed_.end(), y, canonical_less);
}

bool XTopSpace::is_open_set(const ElementSet& y) const {
    return std::binary_search(open_.begin(), open_.end(), y, canonical_less);
}

ElementSet XTopSpace::closure(const ElementSet& y) const {
    require_subset(y);
    return varieties_[lattice_->meet_all(y)];
}

ElementSet XTopSpace::interior(const ElementSet& y) const {
    require_subset(y);
    return points_ - closure(points_ - y);
}

ElementSet XTopSpace::kernel(Index x) const {
    require_point(x);
    ElementSet k = points_;
    for (const auto& u : open_) {
        if (u.contains(x)) k &= u;
    }
    return k;
}

ExcludedMeet XTopSpace::excluded_meet(Index x) const {
    require_point(x);
    ElementSet rest = points_;
    rest.erase(x);
    const Index e = lattice_->meet_all(rest);
    const Index d = lattice_->meet_all(covariety(x));
    return {e, d, e == d};
}

XTopSpace XTopSpace::subspace(const ElementSet& y) const {
    require_subset(y);
    return build(lattice_, y);
}

FinitePoset XTopSpace::specialization_poset() const {
    const std::size_t n = point_list_.size();
    std::vector<std::string> labels;
    labels.reserve(n);
    for (Index p : point_list_) labels.push_back(lattice_->label(p));
    std::vector<char> leq(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const ElementSet& cl = varieties_[point_list_[i]];
        for (std::size_t j = 0; j < n; ++j) leq[i * n + j] = cl.contains(point_list_[j]) ? 1 : 0;
    }
    return FinitePoset::from_matrix(std::move(labels), std::move(leq));
}

}  // namespace xtop
