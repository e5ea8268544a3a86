#include "xtop/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "xtop/errors.hpp"
#include "xtop/forest_spec.hpp"

namespace xtop {

namespace {

void transitive_closure(std::vector<char>& m, std::size_t n) {
    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> rows(n * words, 0);
    for (std::size_t i = 0; i < n; ++i) {
        m[i * n + i] = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (m[i * n + j]) rows[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
        }
    }
    // Warshall over bit rows: if i <= k then row(i) |= row(k).
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if ((rows[i * words + k / 64] >> (k % 64)) & 1u) {
                for (std::size_t w = 0; w < words; ++w) rows[i * words + w] |= rows[k * words + w];
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m[i * n + j] = static_cast<char>((rows[i * words + j / 64] >> (j % 64)) & 1u);
        }
    }
}

}  // namespace

FinitePoset::FinitePoset(std::vector<std::string> labels, std::vector<char> leq)
    : labels_(std::move(labels)), leq_(std::move(leq)) {
    const std::size_t n = labels_.size();
    by_label_.reserve(n);
    for (Index i = 0; i < n; ++i) {
        if (!by_label_.emplace(labels_[i], i).second) {
            throw DuplicateLabelError("duplicate label '" + labels_[i] + "'");
        }
    }
    up_.resize(n);
    down_.resize(n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            if (leq_[i * n + j]) {
                up_[i].insert(j);
                down_[j].insert(i);
            }
        }
    }
}

FinitePoset FinitePoset::from_matrix(std::vector<std::string> labels, std::vector<char> leq) {
    const std::size_t n = labels.size();
    if (leq.size() != n * n) throw Error("relation matrix has wrong size");
    transitive_closure(leq, n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            if (leq[i * n + j] && leq[j * n + i]) {
                throw CycleError("order relation has a cycle through '" + labels[i] + "' and '" +
                                 labels[j] + "'");
            }
        }
    }
    return FinitePoset(std::move(labels), std::move(leq));
}

FinitePoset FinitePoset::from_index_pairs(std::vector<std::string> labels,
                                          const std::vector<std::pair<Index, Index>>& pairs) {
    const std::size_t n = labels.size();
    std::vector<char> m(n * n, 0);
    for (auto [a, b] : pairs) {
        if (a >= n || b >= n) throw IndexError("relation pair index out of range");
        m[a * n + b] = 1;
    }
    return from_matrix(std::move(labels), std::move(m));
}

FinitePoset FinitePoset::from_relation(std::vector<std::string> labels,
                                       const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::unordered_map<std::string, Index> idx;
    for (Index i = 0; i < labels.size(); ++i) {
        if (!idx.emplace(labels[i], i).second) {
            throw DuplicateLabelError("duplicate label '" + labels[i] + "'");
        }
    }
    std::vector<std::pair<Index, Index>> ip;
    ip.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        auto ia = idx.find(a);
        auto ib = idx.find(b);
        if (ia == idx.end()) throw ParseError("unknown label '" + a + "' in relation");
        if (ib == idx.end()) throw ParseError("unknown label '" + b + "' in relation");
        ip.emplace_back(ia->second, ib->second);
    }
    return from_index_pairs(std::move(labels), ip);
}

const std::string& FinitePoset::label(Index i) const {
    if (i >= size()) throw IndexError("element index " + std::to_string(i) + " out of range");
    return labels_[i];
}

Index FinitePoset::index_of(std::string_view label) const {
    auto it = by_label_.find(std::string(label));
    if (it == by_label_.end()) throw ParseError("unknown label '" + std::string(label) + "'");
    return it->second;
}

bool FinitePoset::has_label(std::string_view label) const {
    return by_label_.count(std::string(label)) != 0;
}

FinitePoset FinitePoset::induced(const ElementSet& subset) const {
    const auto members = subset.elements();
    const std::size_t k = members.size();
    std::vector<std::string> labels;
    labels.reserve(k);
    for (Index m : members) labels.push_back(label(m));
    std::vector<char> m(k * k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) m[i * k + j] = leq(members[i], members[j]) ? 1 : 0;
    }
    return FinitePoset(std::move(labels), std::move(m));
}

std::vector<std::pair<Index, Index>> FinitePoset::covers() const {
    std::vector<std::pair<Index, Index>> out;
    const std::size_t n = size();
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            if (!lt(a, b)) continue;
            bool cover = true;
            for (Index c = 0; c < n && cover; ++c) {
                if (lt(a, c) && lt(c, b)) cover = false;
            }
            if (cover) out.emplace_back(a, b);
        }
    }
    return out;
}

std::vector<std::pair<Index, Index>> FinitePoset::strict_pairs() const {
    std::vector<std::pair<Index, Index>> out;
    for (Index a = 0; a < size(); ++a) {
        for (Index b = 0; b < size(); ++b) {
            if (lt(a, b)) out.emplace_back(a, b);
        }
    }
    return out;
}

FinitePoset antichain(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    return FinitePoset::from_index_pairs(std::move(labels), {});
}

FinitePoset chain(std::size_t k) {
    if (k == 0) throw ZeroSizeError("chain needs at least one element");
    std::vector<std::string> labels;
    std::vector<std::pair<Index, Index>> pairs;
    for (std::size_t i = 0; i < k; ++i) {
        labels.push_back("x" + std::to_string(i));
        if (i) pairs.emplace_back(i - 1, i);
    }
    return FinitePoset::from_index_pairs(std::move(labels), pairs);
}

FinitePoset tree(std::size_t n) {
    if (n == 0) throw ZeroSizeError("tree needs at least one minimal element");
    std::vector<std::string> labels;
    std::vector<std::pair<Index, Index>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back("a" + std::to_string(i + 1));
        pairs.emplace_back(i, n);
    }
    labels.push_back("m");
    return FinitePoset::from_index_pairs(std::move(labels), pairs);
}

FinitePoset dual_tree(std::size_t m) {
    if (m == 0) throw ZeroSizeError("dual tree needs at least one maximal element");
    std::vector<std::string> labels{"b"};
    std::vector<std::pair<Index, Index>> pairs;
    for (std::size_t i = 0; i < m; ++i) {
        labels.push_back("m" + std::to_string(i + 1));
        pairs.emplace_back(0, i + 1);
    }
    return FinitePoset::from_index_pairs(std::move(labels), pairs);
}

FinitePoset component_poset(const ForestComponent& c) {
    switch (c.kind) {
        case ForestComponent::Kind::Tree: return tree(c.n);
        case ForestComponent::Kind::DualTree: return dual_tree(c.n);
        case ForestComponent::Kind::Chain: return chain(c.n);
    }
    throw Error("unknown forest component");
}

FinitePoset disjoint_union(const std::vector<FinitePoset>& parts) {
    std::vector<std::string> labels;
    std::vector<std::pair<Index, Index>> pairs;
    Index offset = 0;
    for (std::size_t j = 0; j < parts.size(); ++j) {
        const auto& p = parts[j];
        for (Index i = 0; i < p.size(); ++i) labels.push_back(p.label(i) + "#" + std::to_string(j + 1));
        for (auto [a, b] : p.strict_pairs()) pairs.emplace_back(a + offset, b + offset);
        offset += p.size();
    }
    return FinitePoset::from_index_pairs(std::move(labels), pairs);
}

FinitePoset forest(const ForestSpec& spec) {
    if (spec.empty()) throw EmptySpecError("forest needs at least one component");
    std::vector<FinitePoset> parts;
    parts.reserve(spec.size());
    for (const auto& c : spec) parts.push_back(component_poset(c));
    return disjoint_union(parts);
}

std::vector<std::size_t> heights(const FinitePoset& p) {
    const std::size_t n = p.size();
    std::vector<std::size_t> h(n, 0);
    // Process in order of |down set|, which is a linear extension.
    std::vector<Index> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Index a, Index b) {
        return p.down_set(a).size() < p.down_set(b).size();
    });
    for (Index x : order) {
        p.down_set(x).for_each([&](Index y) {
            if (y != x) h[x] = std::max(h[x], h[y] + 1);
        });
    }
    return h;
}

std::size_t height(const FinitePoset& p, Index x) {
    if (x >= p.size()) throw IndexError("element index " + std::to_string(x) + " out of range");
    return heights(p)[x];
}

std::size_t krull_dim(const FinitePoset& p) {
    if (p.empty()) throw EmptyPosetError("Krull dimension of an empty poset");
    const auto h = heights(p);
    return *std::max_element(h.begin(), h.end());
}

Extremes extremes(const FinitePoset& p) {
    Extremes e;
    for (Index x = 0; x < p.size(); ++x) {
        if (p.down_set(x).size() == 1) e.minimal.insert(x);
        if (p.up_set(x).size() == 1) e.maximal.insert(x);
    }
    return e;
}

std::vector<ElementSet> upsets(const FinitePoset& p) {
    const std::size_t n = p.size();
    const auto h = heights(p);
    std::vector<Index> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return h[a] > h[b]; });

    std::vector<ElementSet> out;
    ElementSet current;
    // Everything strictly above order[k] is decided before order[k].
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == n) {
            out.push_back(current);
            return;
        }
        const Index x = order[k];
        rec(k + 1);
        ElementSet above = p.up_set(x);
        above.erase(x);
        if (above.is_subset_of(current)) {
            current.insert(x);
            rec(k + 1);
            current.erase(x);
        }
    };
    rec(0);
    sort_canonical(out);
    return out;
}

std::vector<ElementSet> order_components(const FinitePoset& p) {
    const std::size_t n = p.size();
    std::vector<Index> comp(n, n);
    std::vector<ElementSet> out;
    for (Index s = 0; s < n; ++s) {
        if (comp[s] != n) continue;
        ElementSet c;
        std::vector<Index> stack{s};
        comp[s] = out.size();
        while (!stack.empty()) {
            Index x = stack.back();
            stack.pop_back();
            c.insert(x);
            for (Index y = 0; y < n; ++y) {
                if (comp[y] == n && p.comparable(x, y)) {
                    comp[y] = out.size();
                    stack.push_back(y);
                }
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<std::uint64_t> canonical_form(const FinitePoset& p) {
    const std::size_t n = p.size();
    // Colour refinement on (colour, colours strictly above, colours strictly below).
    std::vector<std::size_t> colour(n, 0);
    for (std::size_t round = 0; round <= n; ++round) {
        std::vector<std::pair<std::vector<std::size_t>, Index>> sig(n);
        for (Index x = 0; x < n; ++x) {
            std::vector<std::size_t> above, below;
            for (Index y = 0; y < n; ++y) {
                if (p.lt(x, y)) above.push_back(colour[y]);
                if (p.lt(y, x)) below.push_back(colour[y]);
            }
            std::sort(above.begin(), above.end());
            std::sort(below.begin(), below.end());
            std::vector<std::size_t> s{colour[x], above.size()};
            s.insert(s.end(), above.begin(), above.end());
            s.push_back(below.size());
            s.insert(s.end(), below.begin(), below.end());
            sig[x] = {std::move(s), x};
        }
        std::map<std::vector<std::size_t>, std::size_t> ids;
        for (auto& [s, x] : sig) ids.emplace(s, 0);
        std::size_t next = 0;
        for (auto& [s, id] : ids) id = next++;
        std::vector<std::size_t> refined(n);
        for (auto& [s, x] : sig) refined[x] = ids[s];
        const bool stable = std::set<std::size_t>(refined.begin(), refined.end()).size() ==
                            std::set<std::size_t>(colour.begin(), colour.end()).size();
        colour = std::move(refined);
        if (stable) break;
    }

    // Cells ordered by colour; search over within-cell permutations for the
    // lexicographically smallest relation bitstring.
    std::map<std::size_t, std::vector<Index>> cells;
    for (Index x = 0; x < n; ++x) cells[colour[x]].push_back(x);
    std::vector<std::vector<Index>> groups;
    for (auto& [c, g] : cells) groups.push_back(g);

    const std::size_t words = (n * n + 63) / 64;
    std::vector<std::uint64_t> best;
    std::vector<Index> perm;
    auto encode = [&](const std::vector<Index>& order) {
        std::vector<std::uint64_t> bits(words, 0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (p.leq(order[i], order[j])) {
                    const std::size_t b = i * n + j;
                    bits[b / 64] |= std::uint64_t{1} << (b % 64);
                }
            }
        }
        return bits;
    };
    std::function<void(std::size_t)> rec = [&](std::size_t g) {
        if (g == groups.size()) {
            auto bits = encode(perm);
            if (best.empty() || bits < best) best = std::move(bits);
            return;
        }
        auto cell = groups[g];
        std::sort(cell.begin(), cell.end());
        do {
            perm.insert(perm.end(), cell.begin(), cell.end());
            rec(g + 1);
            perm.resize(perm.size() - cell.size());
        } while (std::next_permutation(cell.begin(), cell.end()));
    };
    rec(0);

    std::vector<std::uint64_t> key{n};
    for (auto& g : groups) key.push_back(g.size());
    key.insert(key.end(), best.begin(), best.end());
    return key;
}

bool is_isomorphic(const FinitePoset& a, const FinitePoset& b) {
    return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

bool recognize_forest(const FinitePoset& p, ForestSpec& out) {
    out.clear();
    if (p.empty()) return false;
    for (const auto& c : order_components(p)) {
        const FinitePoset q = p.induced(c);
        const std::size_t k = q.size();
        const auto e = extremes(q);
        bool total = true;
        for (Index a = 0; a < k && total; ++a) {
            for (Index b = 0; b < k && total; ++b) total = q.comparable(a, b);
        }
        if (total) {
            out.push_back({ForestComponent::Kind::Chain, k});
        } else if (krull_dim(q) == 1 && e.maximal.size() == 1 && e.minimal.size() == k - 1) {
            out.push_back({ForestComponent::Kind::Tree, k - 1});
        } else if (krull_dim(q) == 1 && e.minimal.size() == 1 && e.maximal.size() == k - 1) {
            out.push_back({ForestComponent::Kind::DualTree, k - 1});
        } else {
            out.clear();
            return false;
        }
    }
    std::sort(out.begin(), out.end(), [](const ForestComponent& a, const ForestComponent& b) {
        if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        return a.n < b.n;
    });
    return true;
}

std::string describe_shape(const FinitePoset& p) {
    ForestSpec spec;
    if (recognize_forest(p, spec)) return to_string(spec);
    std::ostringstream os;
    os << "poset(n=" << p.size() << ",kdim=" << (p.empty() ? 0 : krull_dim(p)) << ")";
    return os.str();
}

}  // namespace xtop
