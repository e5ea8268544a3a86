#include "xtop/enumerate.hpp"

#include <set>

#include "xtop/errors.hpp"

namespace xtop {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < n; ++k) out.push_back("p" + std::to_string(k));
    return out;
}

}  // namespace

std::vector<FinitePoset> posets_up_to_iso(std::size_t n) {
    // Every poset has a linear extension, so each class of size k+1 arises by
    // adding a maximal element above some down-set of a size-k representative.
    std::vector<FinitePoset> level{FinitePoset::from_matrix({}, {})};
    for (std::size_t k = 0; k < n; ++k) {
        std::set<std::vector<std::uint64_t>> seen;
        std::vector<FinitePoset> next;
        for (const auto& p : level) {
            const std::size_t m = p.size();
            // Down-sets of p are the complements of its up-sets.
            for (const auto& up : upsets(p)) {
                const ElementSet below = ElementSet::full(m) - up;
                std::vector<char> leq(static_cast<std::size_t>((m + 1) * (m + 1)), 0);
                for (Index a = 0; a < m; ++a) {
                    for (Index b = 0; b < m; ++b) leq[a * (m + 1) + b] = p.leq(a, b);
                    leq[a * (m + 1) + m] = below.contains(a);
                }
                leq[m * (m + 1) + m] = 1;
                FinitePoset q = FinitePoset::from_matrix(default_labels(m + 1), std::move(leq));
                if (seen.insert(canonical_form(q)).second) next.push_back(std::move(q));
            }
        }
        level = std::move(next);
    }
    return level;
}

std::vector<FiniteLattice> lattices_up_to_iso(std::size_t n) {
    if (n == 0) throw ZeroSizeError("a lattice needs at least one element");
    std::vector<FiniteLattice> out;
    if (n == 1) {
        out.push_back(FiniteLattice::from_poset(FinitePoset::from_matrix({"0"}, {1})));
        return out;
    }
    for (const auto& inner : posets_up_to_iso(n - 2)) {
        const std::size_t m = inner.size();
        std::vector<std::string> labels{"0"};
        for (Index a = 0; a < m; ++a) labels.push_back(inner.label(a));
        labels.push_back("1");
        std::vector<char> leq(n * n, 0);
        for (Index a = 0; a < n; ++a) {
            leq[0 * n + a] = 1;
            leq[a * n + (n - 1)] = 1;
        }
        for (Index a = 0; a < m; ++a) {
            for (Index b = 0; b < m; ++b) leq[(a + 1) * n + (b + 1)] = inner.leq(a, b);
        }
        try {
            out.push_back(FiniteLattice::from_poset(FinitePoset::from_matrix(std::move(labels), std::move(leq))));
        } catch (const NotALatticeError&) {
        }
    }
    return out;
}

std::size_t element_count(const ForestComponent& c) {
    return c.kind == ForestComponent::Kind::Chain ? c.n : c.n + 1;
}

std::size_t element_count(const ForestSpec& spec) {
    std::size_t total = 0;
    for (const auto& c : spec) total += element_count(c);
    return total;
}

std::vector<ForestSpec> forests_up_to(std::size_t max_total, const std::vector<ForestComponent::Kind>& kinds,
                                      std::size_t min_n) {
    std::vector<ForestComponent> parts;
    for (auto kind : kinds) {
        for (std::size_t n = std::max<std::size_t>(min_n, 1);; ++n) {
            const ForestComponent c{kind, n};
            if (element_count(c) > max_total) break;
            parts.push_back(c);
        }
    }
    std::vector<ForestSpec> out;
    ForestSpec cur;
    // Non-decreasing index into parts gives each multiset once.
    auto rec = [&](auto&& self, std::size_t from, std::size_t used) -> void {
        if (!cur.empty()) out.push_back(cur);
        for (std::size_t k = from; k < parts.size(); ++k) {
            const std::size_t c = element_count(parts[k]);
            if (used + c > max_total) continue;
            cur.push_back(parts[k]);
            self(self, k, used + c);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace xtop
