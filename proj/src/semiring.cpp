#include "xtop/semiring.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "xtop/errors.hpp"

namespace xtop {

namespace {

std::string triple(const std::vector<std::string>& l, Index x, Index y, Index z) {
    return "(" + l[x] + "," + l[y] + "," + l[z] + ")";
}

// Overflow rule of B(n, i).
std::size_t bni_reduce(std::size_t v, std::size_t n, std::size_t i) {
    if (v <= n - 1) return v;
    const std::size_t m = n - i;
    return i + ((v - i) % m);
}

ElementSet sum_of(const FiniteSemiring& r, const ElementSet& a, const ElementSet& b) {
    ElementSet out;
    a.for_each([&](Index x) { b.for_each([&](Index y) { out.insert(r.add(x, y)); }); });
    return out;
}

ElementSet principal(const FiniteSemiring& r, Index a) {
    ElementSet out;
    for (Index x = 0; x < r.size(); ++x) out.insert(r.mul(x, a));
    return out;
}

ElementSet intersect_all(const std::vector<Ideal>& family, std::size_t n) {
    ElementSet acc = ElementSet::full(n);
    for (const auto& i : family) acc &= i.members;
    return acc;
}

std::vector<Ideal> maximal_of(const std::vector<Ideal>& family) {
    std::vector<Ideal> out;
    for (const auto& a : family) {
        bool top = true;
        for (const auto& b : family) {
            if (a.members != b.members && a.members.is_subset_of(b.members)) top = false;
        }
        if (top) out.push_back(a);
    }
    return out;
}

std::vector<Ideal> minimal_of(const std::vector<Ideal>& family) {
    std::vector<Ideal> out;
    for (const auto& a : family) {
        bool bottom = true;
        for (const auto& b : family) {
            if (a.members != b.members && b.members.is_subset_of(a.members)) bottom = false;
        }
        if (bottom) out.push_back(a);
    }
    return out;
}

// Longest strict inclusion chain, counted in steps.
std::size_t chain_length(std::vector<Ideal> family) {
    std::sort(family.begin(), family.end(),
              [](const Ideal& a, const Ideal& b) { return a.members.size() < b.members.size(); });
    std::vector<std::size_t> h(family.size(), 0);
    std::size_t best = 0;
    for (std::size_t k = 0; k < family.size(); ++k) {
        for (std::size_t j = 0; j < k; ++j) {
            if (family[j].members != family[k].members && family[j].members.is_subset_of(family[k].members)) {
                h[k] = std::max(h[k], h[j] + 1);
            }
        }
        best = std::max(best, h[k]);
    }
    return best;
}

// Each q in `family` with the intersection of the others not inside q.
bool all_irredundant(const std::vector<Ideal>& family, std::size_t n) {
    for (std::size_t k = 0; k < family.size(); ++k) {
        ElementSet others = ElementSet::full(n);
        for (std::size_t j = 0; j < family.size(); ++j) {
            if (j != k) others &= family[j].members;
        }
        if (others.is_subset_of(family[k].members)) return false;
    }
    return true;
}

bool contains_ideal(const std::vector<Ideal>& family, const Ideal& i) {
    return std::find(family.begin(), family.end(), i) != family.end();
}

std::string ideal_label(const FiniteSemiring& r, const ElementSet& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](Index x) {
        if (!first) out += ',';
        out += r.label(x);
        first = false;
    });
    return out + "}";
}

}  // namespace

FiniteSemiring FiniteSemiring::from_tables(std::vector<std::string> labels, std::vector<Index> add,
                                           std::vector<Index> mul, Index zero, Index one) {
    const std::size_t n = labels.size();
    if (n == 0) throw AxiomError("nonempty", 0, 0, 0, "a semiring needs at least one element");
    {
        std::unordered_set<std::string> seen;
        for (const auto& l : labels) {
            if (!seen.insert(l).second) throw DuplicateLabelError("duplicate element label '" + l + "'");
        }
    }
    if (add.size() != n * n || mul.size() != n * n) {
        throw AxiomError("closure", 0, 0, 0, "operation tables must be " + std::to_string(n) + "x" + std::to_string(n));
    }
    if (zero >= n || one >= n) throw AxiomError("closure", zero, one, 0, "zero/one index out of range");
    for (Index k = 0; k < n * n; ++k) {
        if (add[k] >= n || mul[k] >= n) {
            throw AxiomError("closure", k / n, k % n, 0, "table entry out of range at " + labels[k / n] + "," + labels[k % n]);
        }
    }
    auto A = [&](Index x, Index y) { return add[x * n + y]; };
    auto M = [&](Index x, Index y) { return mul[x * n + y]; };

    if (one == zero) throw AxiomError("one_ne_zero", zero, one, 0, "1 must differ from 0");
    for (Index x = 0; x < n; ++x) {
        if (A(zero, x) != x || A(x, zero) != x)
            throw AxiomError("add_identity", x, zero, 0, "0 is not additive identity at " + labels[x]);
        if (M(one, x) != x || M(x, one) != x)
            throw AxiomError("mul_identity", x, one, 0, "1 is not multiplicative identity at " + labels[x]);
        if (M(zero, x) != zero || M(x, zero) != zero)
            throw AxiomError("absorption", x, zero, 0, "0 is not absorbing at " + labels[x]);
        for (Index y = 0; y < n; ++y) {
            if (A(x, y) != A(y, x))
                throw AxiomError("add_commutative", x, y, 0, "addition not commutative at " + triple(labels, x, y, y));
            if (M(x, y) != M(y, x))
                throw AxiomError("mul_commutative", x, y, 0,
                                 "multiplication not commutative at " + triple(labels, x, y, y));
        }
    }
    for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
            for (Index z = 0; z < n; ++z) {
                if (A(A(x, y), z) != A(x, A(y, z)))
                    throw AxiomError("add_associative", x, y, z,
                                     "addition not associative at " + triple(labels, x, y, z));
                if (M(M(x, y), z) != M(x, M(y, z)))
                    throw AxiomError("mul_associative", x, y, z,
                                     "multiplication not associative at " + triple(labels, x, y, z));
                if (M(x, A(y, z)) != A(M(x, y), M(x, z)) || M(A(y, z), x) != A(M(y, x), M(z, x)))
                    throw AxiomError("distributive", x, y, z, "distributivity fails at " + triple(labels, x, y, z));
            }
        }
    }
    FiniteSemiring r;
    r.labels_ = std::move(labels);
    r.add_ = std::move(add);
    r.mul_ = std::move(mul);
    r.zero_ = zero;
    r.one_ = one;
    return r;
}

const std::string& FiniteSemiring::label(Index a) const {
    if (a >= size()) throw IndexError("semiring element " + std::to_string(a) + " out of range");
    return labels_[a];
}

Index FiniteSemiring::index_of(std::string_view label) const {
    for (Index k = 0; k < size(); ++k) {
        if (labels_[k] == label) return k;
    }
    throw ParseError("unknown semiring element '" + std::string(label) + "'");
}

Index FiniteSemiring::pow(Index a, std::size_t k) const {
    Index acc = a;
    for (std::size_t j = 1; j < k; ++j) acc = mul(acc, a);
    return acc;
}

FiniteSemiring bni(std::size_t n, std::size_t i) {
    if (n < 2) throw RangeError("B(n,i) needs n >= 2");
    if (i > n - 1) throw RangeError("B(n,i) needs 0 <= i <= n-1");
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < n; ++x) labels.push_back(std::to_string(x));
    std::vector<Index> add(n * n), mul(n * n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            add[x * n + y] = bni_reduce(x + y, n, i);
            mul[x * n + y] = bni_reduce(x * y, n, i);
        }
    }
    return FiniteSemiring::from_tables(std::move(labels), std::move(add), std::move(mul), 0, 1);
}

FiniteSemiring zn(std::size_t n) { return bni(n, 0); }

FiniteSemiring boolean_semiring() { return bni(2, 1); }

FiniteSemiring s3() {
    // Element order: 0, a, 1.
    return FiniteSemiring::from_tables({"0", "a", "1"},
                                       {0, 1, 2,  //
                                        1, 1, 2,  //
                                        2, 2, 2},
                                       {0, 0, 0,  //
                                        0, 1, 1,  //
                                        0, 1, 2},
                                       0, 2);
}

bool is_ideal(const FiniteSemiring& r, const ElementSet& s) {
    const std::size_t n = r.size();
    if (!s.contains(r.zero())) return false;
    bool ok = true;
    s.for_each([&](Index a) {
        if (a >= n) ok = false;
    });
    if (!ok) return false;
    s.for_each([&](Index a) {
        s.for_each([&](Index b) { ok = ok && s.contains(r.add(a, b)); });
        for (Index x = 0; x < n; ++x) ok = ok && s.contains(r.mul(x, a));
    });
    return ok;
}

bool is_prime(const FiniteSemiring& r, const Ideal& p) {
    const std::size_t n = r.size();
    if (p.members.size() == n) return false;
    for (Index a = 0; a < n; ++a) {
        if (p.members.contains(a)) continue;
        for (Index b = 0; b < n; ++b) {
            if (!p.members.contains(b) && p.members.contains(r.mul(a, b))) return false;
        }
    }
    return true;
}

std::vector<Ideal> ideals(const FiniteSemiring& r) {
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::vector<ElementSet> family;
    auto add = [&](ElementSet s) {
        if (seen.insert(s).second) family.push_back(std::move(s));
    };
    std::vector<ElementSet> principals;
    for (Index a = 0; a < r.size(); ++a) principals.push_back(principal(r, a));
    for (const auto& p : principals) add(p);
    // Every ideal is a finite sum of principal ideals, so adding one
    // principal ideal at a time reaches all of them.
    for (std::size_t k = 0; k < family.size(); ++k) {
        for (const auto& p : principals) {
            if (!p.is_subset_of(family[k])) add(sum_of(r, family[k], p));
        }
    }
    sort_canonical(family);
    std::vector<Ideal> out;
    out.reserve(family.size());
    for (auto& s : family) {
        if (!is_ideal(r, s)) throw Error("internal: generated set " + ideal_label(r, s) + " is not an ideal");
        out.push_back({std::move(s)});
    }
    return out;
}

bool is_subtractive(const FiniteSemiring& r, const Ideal& i) {
    if (!is_ideal(r, i.members)) throw NotAnIdealError(ideal_label(r, i.members) + " is not an ideal");
    bool ok = true;
    for (Index x = 0; x < r.size() && ok; ++x) {
        if (i.members.contains(x)) continue;
        i.members.for_each([&](Index a) {
            if (i.members.contains(r.add(x, a))) ok = false;
        });
    }
    return ok;
}

bool is_subtractive_semiring(const FiniteSemiring& r) {
    const auto all = ideals(r);
    return std::all_of(all.begin(), all.end(), [&](const Ideal& i) { return is_subtractive(r, i); });
}

SpectrumReport spectrum(const FiniteSemiring& r) {
    const std::size_t n = r.size();
    SpectrumReport rep;
    rep.ideals = ideals(r);
    for (const auto& i : rep.ideals) {
        if (is_prime(r, i)) rep.spec.push_back(i);
    }
    std::vector<Ideal> proper;
    for (const auto& i : rep.ideals) {
        if (i.members.size() < n) proper.push_back(i);
    }
    rep.max = maximal_of(proper);
    rep.min_primes = minimal_of(rep.spec);
    rep.jacobson = {intersect_all(rep.max, n)};
    rep.prime_radical = {intersect_all(rep.spec, n)};
    for (Index a = 0; a < n; ++a) {
        // The powers of a either hit 0 within n steps or cycle without it.
        for (std::size_t k = 1; k <= n; ++k) {
            if (r.pow(a, k) == r.zero()) {
                rep.nilradical.members.insert(a);
                break;
            }
        }
    }
    rep.kdim = chain_length(rep.spec);

    rep.is_local = rep.max.size() == 1;
    rep.is_reduced = rep.nilradical.members == ElementSet{r.zero()};
    rep.is_vnr = rep.is_pi_regular = true;
    rep.is_add_idempotent = rep.is_mul_idempotent = true;
    rep.is_semidomain = true;
    for (Index a = 0; a < n; ++a) {
        bool vnr = false;
        for (Index b = 0; b < n && !vnr; ++b) vnr = r.mul(r.mul(a, b), a) == a;
        rep.is_vnr = rep.is_vnr && vnr;

        bool pi = false;
        for (std::size_t k = 1; k <= n && !pi; ++k) {
            const Index ak = r.pow(a, k);
            for (Index b = 0; b < n && !pi; ++b) pi = r.mul(r.mul(ak, b), ak) == ak;
        }
        rep.is_pi_regular = rep.is_pi_regular && pi;

        rep.is_add_idempotent = rep.is_add_idempotent && r.add(a, a) == a;
        rep.is_mul_idempotent = rep.is_mul_idempotent && r.mul(a, a) == a;
        for (Index b = 0; b < n; ++b) {
            if (a != r.zero() && b != r.zero() && r.mul(a, b) == r.zero()) rep.is_semidomain = false;
        }
    }
    rep.is_idempotent = rep.is_add_idempotent && rep.is_mul_idempotent;
    rep.is_subtractive_semiring = std::all_of(rep.ideals.begin(), rep.ideals.end(),
                                              [&](const Ideal& i) { return is_subtractive(r, i); });
    rep.is_fmax = rep.is_fmin = true;
    rep.is_bmax = all_irredundant(rep.max, n);
    rep.is_amin = all_irredundant(rep.min_primes, n);
    // Every prime must itself be minimal (resp. maximal) and irredundant there.
    rep.is_pamin = rep.is_amin && std::all_of(rep.spec.begin(), rep.spec.end(), [&](const Ideal& p) {
                       return contains_ideal(rep.min_primes, p);
                   });
    rep.is_pbmax = rep.is_bmax && std::all_of(rep.spec.begin(), rep.spec.end(), [&](const Ideal& p) {
                       return contains_ideal(rep.max, p);
                   });
    return rep;
}

Index IdealLattice::index_of(const Ideal& i) const {
    for (Index k = 0; k < ideals.size(); ++k) {
        if (ideals[k] == i) return k;
    }
    throw NotAnIdealError("set is not an ideal of this semiring");
}

IdealLattice ideal_lattice(const FiniteSemiring& r) {
    IdealLattice out;
    out.ideals = ideals(r);
    const std::size_t m = out.ideals.size();
    std::vector<std::string> labels;
    for (const auto& i : out.ideals) labels.push_back(ideal_label(r, i.members));
    std::vector<char> leq(m * m, 0);
    for (Index a = 0; a < m; ++a) {
        for (Index b = 0; b < m; ++b) leq[a * m + b] = out.ideals[a].members.is_subset_of(out.ideals[b].members);
    }
    FinitePoset order = FinitePoset::from_matrix(std::move(labels), std::move(leq));
    // Canonical order sorts by size first, so it extends inclusion: the join
    // is the first common upper bound and the meet the last common lower one.
    std::vector<Index> meet(m * m), join(m * m);
    for (Index a = 0; a < m; ++a) {
        for (Index b = a; b < m; ++b) {
            const Index lo = ElementSet::last_common(order.down_set(a), order.down_set(b));
            const Index hi = ElementSet::first_common(order.up_set(a), order.up_set(b));
            meet[a * m + b] = meet[b * m + a] = lo;
            join[a * m + b] = join[b * m + a] = hi;
        }
    }
    out.lattice = std::make_shared<const FiniteLattice>(
        FiniteLattice::from_tables(std::move(order), std::move(meet), std::move(join)));
    return out;
}

XTopSpace spec_space(const FiniteSemiring& r, SpecSelector which) {
    const IdealLattice il = ideal_lattice(r);
    const SpectrumReport rep = spectrum(r);
    const std::vector<Ideal>* pick = &rep.spec;
    if (which == SpecSelector::Max) pick = &rep.max;
    if (which == SpecSelector::Min) pick = &rep.min_primes;
    ElementSet x;
    for (const auto& p : *pick) {
        if (which == SpecSelector::DropZero && p.members == ElementSet{r.zero()}) continue;
        x.insert(il.index_of(p));
    }
    return XTopSpace::build(il.lattice, std::move(x));
}

std::vector<std::size_t> prime_divisors(std::size_t k) {
    if (k < 2) throw RangeError("prime divisors need k >= 2");
    std::vector<std::size_t> out;
    for (std::size_t p = 2; p * p <= k; ++p) {
        if (k % p == 0) {
            out.push_back(p);
            while (k % p == 0) k /= p;
        }
    }
    if (k > 1) out.push_back(k);
    return out;
}

std::size_t omega(std::size_t k) {
    if (k < 2) throw RangeError("omega needs k >= 2");
    return prime_divisors(k).size();
}

BniVerification verify_bni(std::size_t n, std::size_t i) {
    if (n < 2 || i > n - 1) throw RangeError("verify_bni needs n >= 2 and 0 <= i <= n-1");
    BniVerification v;
    v.n = n;
    v.i = i;

    // pB(n,i) straight from the overflow rule.
    auto multiples = [&](std::size_t p) {
        ElementSet s;
        const std::size_t pe = bni_reduce(p, n, i);
        for (std::size_t x = 0; x < n; ++x) s.insert(bni_reduce(pe * x, n, i));
        return s;
    };
    ElementSet mn;
    mn.insert(0);
    for (std::size_t x = 2; x < n; ++x) mn.insert(x);
    const ElementSet zero{0};

    // Predicted order, as a poset on the predicted ideals.
    std::vector<std::string> labels;
    std::vector<std::pair<Index, Index>> rel;
    if (i == 0) {
        v.theorem_case = 1;
        for (std::size_t p : prime_divisors(n)) v.predicted_spec.push_back(multiples(p));
        v.predicted_kdim = 0;
        for (std::size_t k = 0; k < v.predicted_spec.size(); ++k) labels.push_back("p" + std::to_string(k));
    } else if (n == 2) {
        v.theorem_case = 1;
        v.predicted_spec.push_back(zero);
        v.predicted_kdim = 0;
        labels.push_back("0");
    } else if (i == 1) {
        v.theorem_case = 2;
        v.predicted_spec.push_back(zero);
        labels.push_back("0");
        for (std::size_t p : prime_divisors(n - 1)) {
            v.predicted_spec.push_back(multiples(p));
            labels.push_back("p" + std::to_string(p));
            rel.push_back({0, labels.size() - 1});
        }
        v.predicted_kdim = 1;
    } else if (i == n - 1) {
        v.theorem_case = 3;
        v.predicted_spec = {zero, mn};
        labels = {"0", "m"};
        rel.push_back({0, 1});
        v.predicted_kdim = 1;
    } else {
        v.theorem_case = 4;
        v.predicted_spec = {zero, mn};
        labels = {"0", "m"};
        rel.push_back({0, 1});
        for (std::size_t p : prime_divisors(n - i)) {
            v.predicted_spec.push_back(multiples(p));
            labels.push_back("p" + std::to_string(p));
            rel.push_back({0, labels.size() - 1});
            rel.push_back({labels.size() - 1, 1});
        }
        v.predicted_kdim = 2;
    }
    v.predicted_shape = describe_shape(FinitePoset::from_index_pairs(labels, rel));
    sort_canonical(v.predicted_spec);

    const FiniteSemiring r = bni(n, i);
    const SpectrumReport rep = spectrum(r);
    for (const auto& p : rep.spec) v.computed_spec.push_back(p.members);
    sort_canonical(v.computed_spec);
    v.computed_kdim = rep.kdim;
    {
        std::vector<std::string> cl;
        std::vector<std::pair<Index, Index>> crel;
        for (std::size_t k = 0; k < v.computed_spec.size(); ++k) cl.push_back("q" + std::to_string(k));
        for (std::size_t a = 0; a < v.computed_spec.size(); ++a) {
            for (std::size_t b = 0; b < v.computed_spec.size(); ++b) {
                if (a != b && v.computed_spec[a].is_subset_of(v.computed_spec[b])) crel.push_back({a, b});
            }
        }
        v.computed_shape = describe_shape(FinitePoset::from_index_pairs(cl, crel));
    }
    v.match = v.predicted_spec == v.computed_spec && v.predicted_kdim == v.computed_kdim;
    return v;
}

}  // namespace xtop
