#include "xtop/lattice.hpp"

#include <sstream>
#include <unordered_map>

#include "xtop/errors.hpp"

namespace xtop {

namespace {

// Greatest element of `bounds` w.r.t. `down`, i.e. g in bounds with bounds ⊆ ↓g.
bool greatest(const FinitePoset& p, const ElementSet& bounds, Index& out) {
    bool found = false;
    bounds.for_each([&](Index g) {
        if (!found && bounds.is_subset_of(p.down_set(g))) {
            out = g;
            found = true;
        }
    });
    return found;
}

bool least(const FinitePoset& p, const ElementSet& bounds, Index& out) {
    bool found = false;
    bounds.for_each([&](Index g) {
        if (!found && bounds.is_subset_of(p.up_set(g))) {
            out = g;
            found = true;
        }
    });
    return found;
}

}  // namespace

FiniteLattice::FiniteLattice(FinitePoset order, std::vector<Index> meet, std::vector<Index> join)
    : order_(std::move(order)), meet_(std::move(meet)), join_(std::move(join)) {
    const std::size_t n = order_.size();
    for (Index x = 0; x < n; ++x) {
        if (order_.down_set(x).size() == 1 && order_.up_set(x).size() == n) bottom_ = x;
        if (order_.up_set(x).size() == 1 && order_.down_set(x).size() == n) top_ = x;
    }
}

FiniteLattice FiniteLattice::from_poset(FinitePoset order) {
    const std::size_t n = order.size();
    if (n == 0) throw EmptyPosetError("a lattice needs at least one element");
    std::vector<Index> meet(n * n), join(n * n);
    for (Index a = 0; a < n; ++a) {
        for (Index b = a; b < n; ++b) {
            Index g = 0, l = 0;
            if (!greatest(order, order.down_set(a) & order.down_set(b), g)) {
                throw NotALatticeError(a, b, "'" + order.label(a) + "' and '" + order.label(b) +
                                                 "' have no greatest lower bound");
            }
            if (!least(order, order.up_set(a) & order.up_set(b), l)) {
                throw NotALatticeError(a, b, "'" + order.label(a) + "' and '" + order.label(b) +
                                                 "' have no least upper bound");
            }
            meet[a * n + b] = meet[b * n + a] = g;
            join[a * n + b] = join[b * n + a] = l;
        }
    }
    return FiniteLattice(std::move(order), std::move(meet), std::move(join));
}

FiniteLattice FiniteLattice::from_tables(FinitePoset order, std::vector<Index> meet, std::vector<Index> join) {
    const std::size_t n = order.size();
    if (n == 0) throw EmptyPosetError("a lattice needs at least one element");
    if (meet.size() != n * n || join.size() != n * n) throw Error("meet/join table has wrong size");
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            const Index m = meet[a * n + b];
            const Index j = join[a * n + b];
            if (m >= n || j >= n) throw IndexError("meet/join table entry out of range");
            const auto& da = order.down_set(a);
            const auto& db = order.down_set(b);
            if (!da.contains(m) || !db.contains(m) || !ElementSet::intersection_subset_of(da, db, order.down_set(m))) {
                throw NotALatticeError(a, b, "meet('" + order.label(a) + "','" + order.label(b) +
                                                 "') is not the greatest lower bound");
            }
            const auto& ua = order.up_set(a);
            const auto& ub = order.up_set(b);
            if (!ua.contains(j) || !ub.contains(j) || !ElementSet::intersection_subset_of(ua, ub, order.up_set(j))) {
                throw NotALatticeError(a, b, "join('" + order.label(a) + "','" + order.label(b) +
                                                 "') is not the least upper bound");
            }
        }
    }
    return FiniteLattice(std::move(order), std::move(meet), std::move(join));
}

Index FiniteLattice::meet_all(const ElementSet& s) const {
    Index acc = top_;
    s.for_each([&](Index a) { acc = meet(acc, a); });
    return acc;
}

Index FiniteLattice::meet_all(std::span<const Index> s) const {
    Index acc = top_;
    for (Index a : s) acc = meet(acc, a);
    return acc;
}

Index FiniteLattice::join_all(const ElementSet& s) const {
    Index acc = bottom_;
    s.for_each([&](Index a) { acc = join(acc, a); });
    return acc;
}

std::string lattice_axiom_violation(const FiniteLattice& l) {
    const std::size_t n = l.size();
    std::ostringstream os;
    for (Index a = 0; a < n; ++a) {
        if (l.meet(a, a) != a || l.join(a, a) != a) {
            os << "idempotence fails at " << l.label(a);
            return os.str();
        }
        if (!l.leq(l.bottom(), a) || !l.leq(a, l.top())) {
            os << "bounds fail at " << l.label(a);
            return os.str();
        }
        for (Index b = 0; b < n; ++b) {
            if (l.meet(a, b) != l.meet(b, a) || l.join(a, b) != l.join(b, a)) {
                os << "commutativity fails at (" << l.label(a) << "," << l.label(b) << ")";
                return os.str();
            }
            if (l.meet(a, l.join(a, b)) != a || l.join(a, l.meet(a, b)) != a) {
                os << "absorption fails at (" << l.label(a) << "," << l.label(b) << ")";
                return os.str();
            }
            if (l.leq(a, b) != (l.meet(a, b) == a)) {
                os << "order disagrees with meet at (" << l.label(a) << "," << l.label(b) << ")";
                return os.str();
            }
            for (Index c = 0; c < n; ++c) {
                if (l.meet(l.meet(a, b), c) != l.meet(a, l.meet(b, c)) ||
                    l.join(l.join(a, b), c) != l.join(a, l.join(b, c))) {
                    os << "associativity fails at (" << l.label(a) << "," << l.label(b) << ","
                       << l.label(c) << ")";
                    return os.str();
                }
            }
        }
    }
    return {};
}

EmbeddedSubset::EmbeddedSubset(std::shared_ptr<const FiniteLattice> lattice, ElementSet members)
    : lattice_(std::move(lattice)), members_(std::move(members)) {
    if (!lattice_) throw Error("embedded subset needs a lattice");
    const std::size_t n = lattice_->size();
    members_.for_each([&](Index x) {
        if (x >= n) throw IndexError("subset element " + std::to_string(x) + " out of range");
    });
    if (members_.contains(lattice_->top())) {
        throw SubsetViolationError("X must not contain the top element");
    }
}

ElementSet EmbeddedSubset::maximal() const {
    ElementSet out;
    const auto& l = *lattice_;
    members_.for_each([&](Index q) {
        bool is_max = true;
        members_.for_each([&](Index y) {
            if (l.order().lt(q, y)) is_max = false;
        });
        if (is_max) out.insert(q);
    });
    return out;
}

ElementSet EmbeddedSubset::minimal() const {
    ElementSet out;
    const auto& l = *lattice_;
    members_.for_each([&](Index q) {
        bool is_min = true;
        members_.for_each([&](Index y) {
            if (l.order().lt(y, q)) is_min = false;
        });
        if (is_min) out.insert(q);
    });
    return out;
}

UpsetLattice upset_lattice(const FinitePoset& p) {
    if (p.empty()) throw EmptyPosetError("up-set lattice of an empty poset");
    UpsetLattice out;
    out.upsets = upsets(p);
    const std::size_t n = out.upsets.size();

    std::unordered_map<ElementSet, Index, ElementSetHash> index;
    index.reserve(n * 2);
    for (Index i = 0; i < n; ++i) index.emplace(out.upsets[i], i);

    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& u : out.upsets) {
        // Minimal generators of u.
        std::vector<Index> gens;
        u.for_each([&](Index x) {
            bool minimal_in_u = true;
            u.for_each([&](Index y) {
                if (p.lt(y, x)) minimal_in_u = false;
            });
            if (minimal_in_u) gens.push_back(x);
        });
        if (gens.size() == 1) {
            labels.push_back(p.label(gens.front()));
        } else {
            std::string s = "up{";
            for (std::size_t k = 0; k < gens.size(); ++k) {
                if (k) s += ',';
                s += p.label(gens[k]);
            }
            labels.push_back(s + "}");
        }
    }

    std::vector<char> leq(n * n, 0);
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) leq[a * n + b] = out.upsets[b].is_subset_of(out.upsets[a]) ? 1 : 0;
    }
    FinitePoset order = FinitePoset::from_matrix(std::move(labels), std::move(leq));

    std::vector<Index> meet(n * n), join(n * n);
    for (Index a = 0; a < n; ++a) {
        for (Index b = a; b < n; ++b) {
            const Index m = index.at(out.upsets[a] | out.upsets[b]);
            const Index j = index.at(out.upsets[a] & out.upsets[b]);
            meet[a * n + b] = meet[b * n + a] = m;
            join[a * n + b] = join[b * n + a] = j;
        }
    }
    out.lattice = std::make_shared<const FiniteLattice>(
        FiniteLattice::from_tables(std::move(order), std::move(meet), std::move(join)));

    out.embedding.resize(p.size());
    for (Index x = 0; x < p.size(); ++x) out.embedding[x] = index.at(p.up_set(x));
    return out;
}

bool is_distributive(const FiniteLattice& l) {
    const std::size_t n = l.size();
    for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
            for (Index z = 0; z < n; ++z) {
                if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return false;
            }
        }
    }
    return true;
}

bool has_complete_max_property(const EmbeddedSubset& x) {
    const auto& l = x.lattice();
    const ElementSet max = x.maximal();
    bool ok = true;
    max.for_each([&](Index q) {
        ElementSet others = max;
        others.erase(q);
        if (l.leq(l.meet_all(others), q)) ok = false;
    });
    return ok;
}

bool is_atomic(const EmbeddedSubset& x, const ElementSet& a) {
    if (!x.members().is_subset_of(a)) throw SubsetViolationError("X must be contained in A");
    const auto& l = x.lattice();
    const ElementSet min = x.minimal();
    bool ok = true;
    a.for_each([&](Index e) {
        bool found = false;
        min.for_each([&](Index m) { found = found || l.leq(m, e); });
        ok = ok && found;
    });
    return ok;
}

bool is_coatomic(const EmbeddedSubset& x, const ElementSet& a) {
    if (!x.members().is_subset_of(a)) throw SubsetViolationError("X must be contained in A");
    const auto& l = x.lattice();
    const ElementSet max = x.maximal();
    bool ok = true;
    a.for_each([&](Index e) {
        bool found = false;
        max.for_each([&](Index m) { found = found || l.leq(e, m); });
        ok = ok && found;
    });
    return ok;
}

}  // namespace xtop
