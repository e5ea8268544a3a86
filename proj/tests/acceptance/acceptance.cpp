// One PASS/FAIL line per acceptance criterion, each with its own time budget.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "xtop/enumerate.hpp"
#include "xtop/forest_spec.hpp"
#include "xtop/semiring.hpp"
#include "xtop/separation.hpp"

using namespace xtop;
using oracle::Mask;

namespace {

struct Failures {
    std::vector<std::string> items;
    void expect(bool ok, const std::string& what) {
        if (!ok) items.push_back(what);
    }
};

std::vector<Mask> sorted_masks(const std::vector<Ideal>& f) {
    std::vector<Mask> out;
    for (const auto& i : f) out.push_back(oracle::set_mask(i.members));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Mask> sorted_masks(const std::vector<ElementSet>& f) {
    std::vector<Mask> out;
    for (const auto& s : f) out.push_back(oracle::set_mask(s));
    std::sort(out.begin(), out.end());
    return out;
}

Mask elements(const FiniteSemiring& r, std::initializer_list<const char*> names) {
    Mask m = 0;
    for (const char* n : names) m |= oracle::bit(r.index_of(n));
    return m;
}

std::string bni_name(std::size_t n, std::size_t i) {
    return "B(" + std::to_string(n) + "," + std::to_string(i) + ")";
}

// The library's axioms must match the definitional oracle on the same space.
void axioms_match_oracle(Failures& f, const XTopSpace& s, const SeparationReport& r, const std::string& what) {
    const auto t = oracle::library_topology(s);
    f.expect(r.t0 == oracle::t0(t), what + ": T0 disagrees with the oracle");
    f.expect(r.t1 == oracle::t1(t), what + ": T1 disagrees with the oracle");
    f.expect(r.t_quarter == oracle::t_quarter(t), what + ": T1/4 disagrees with the oracle");
    f.expect(r.t_half == oracle::t_half(t), what + ": T1/2 disagrees with the oracle");
    f.expect(r.t_threequarter == oracle::t_threequarter(t), what + ": T3/4 disagrees with the oracle");
}

Failures s3_golden() {
    Failures f;
    const auto r = s3();
    const auto rep = spectrum(r);
    const Mask z = elements(r, {"0"}), za = elements(r, {"0", "a"}), all = elements(r, {"0", "a", "1"});
    f.expect(sorted_masks(rep.ideals) == std::vector<Mask>{z, za, all}, "Ideal(S3)");
    f.expect(sorted_masks(rep.ideals) == oracle::brute_ideals(r), "Ideal(S3) vs subset scan");
    f.expect(sorted_masks(rep.spec) == std::vector<Mask>{z, za}, "Spec(S3)");
    f.expect(sorted_masks(rep.spec) == oracle::brute_spec(r), "Spec(S3) vs subset scan");
    f.expect(sorted_masks(rep.max) == std::vector<Mask>{za}, "Max(S3)");
    f.expect(rep.kdim == 1, "kdim");
    f.expect(rep.is_local, "local");
    f.expect(rep.is_idempotent, "idempotent");
    f.expect(rep.is_reduced, "reduced");
    f.expect(oracle::set_mask(rep.jacobson.members) == za, "J(S3)");
    f.expect(oracle::set_mask(rep.nilradical.members) == z, "Nil(S3)");
    f.expect(oracle::brute_jacobson(r) == za && oracle::brute_nilradical(r) == z, "radicals vs oracle");

    const auto s = spec_space(r);
    const auto t = oracle::library_topology(s);
    const auto ref = oracle::spec_topology(r);
    // Points are the primes {0} and {0,a}; the open sets are ∅, Spec and {{0}}.
    std::set<std::set<std::string>> opens;
    for (Mask u : t.open) {
        std::set<std::string> names;
        for (std::size_t k = 0; k < t.size(); ++k) {
            if (oracle::has(u, k)) names.insert(t.labels[k]);
        }
        opens.insert(names);
    }
    const std::set<std::set<std::string>> expected{{}, {"{0}", "{0,a}"}, {"{0}"}};
    f.expect(opens == expected, "topology on Spec(S3)");
    f.expect(ref.open.size() == 3, "oracle topology size");
    const auto sep = separation_report(s);
    f.expect(sep.kdim == 1 && oracle::kdim(ref) == 1, "kdim of Spec(S3)");
    f.expect(sep.t0 && !sep.t1, "T0 and not T1");
    f.expect(oracle::t0(ref) && !oracle::t1(ref), "oracle T0 and not T1");
    return f;
}

Failures bni_grid() {
    Failures f;
    for (std::size_t n = 2; n <= 20; ++n) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto v = verify_bni(n, i);
            const std::string what = bni_name(n, i);
            f.expect(v.match, what + ": prediction does not match");
            const auto brute = oracle::brute_spec(bni(n, i));
            f.expect(sorted_masks(v.computed_spec) == brute, what + ": computed spectrum vs subset scan");
            f.expect(sorted_masks(v.predicted_spec) == brute, what + ": predicted spectrum vs subset scan");
        }
    }
    return f;
}

Failures downstream_axioms() {
    Failures f;
    auto check = [&](std::size_t n, std::size_t i, bool quarter_case) {
        const std::string what = bni_name(n, i);
        const auto r = bni(n, i);
        const auto s = spec_space(r);
        const auto rep = separation_report(s);
        if (quarter_case) {
            f.expect(rep.t_half && !rep.t_threequarter, what + ": expected T1/2 and not T3/4");
        } else {
            f.expect(rep.t0 && !rep.t_quarter, what + ": expected T0 and not T1/4");
        }
        axioms_match_oracle(f, s, rep, what);
        const auto ref = oracle::spec_topology(r);
        if (quarter_case) {
            f.expect(oracle::t_half(ref) && !oracle::t_threequarter(ref), what + ": oracle space");
        } else {
            f.expect(oracle::t0(ref) && !oracle::t_quarter(ref), what + ": oracle space");
        }
    };
    for (std::size_t n = 3; n <= 20; ++n) {
        check(n, 1, true);
        check(n, n - 1, true);
    }
    for (std::size_t n = 4; n <= 20; ++n) {
        for (std::size_t i = 2; i + 2 <= n; ++i) check(n, i, false);
    }
    return f;
}

Failures zn_discreteness() {
    Failures f;
    for (std::size_t n = 4; n <= 60; ++n) {
        if (oracle::is_prime_number(n)) continue;
        const std::string what = "Z_" + std::to_string(n);
        const auto r = zn(n);
        std::vector<Mask> expected;
        for (std::size_t p : oracle::trial_prime_divisors(n)) {
            Mask m = 0;
            for (std::size_t k = 0; k < n; k += p) m |= oracle::bit(r.index_of(std::to_string(k)));
            expected.push_back(m);
        }
        std::sort(expected.begin(), expected.end());
        const auto rep = spectrum(r);
        f.expect(sorted_masks(rep.spec) == expected, what + ": Spec is not {(p)}");
        const auto s = spec_space(r);
        const auto sep = separation_report(s);
        f.expect(sep.discrete, what + ": not discrete");
        f.expect(oracle::discrete(oracle::library_topology(s)), what + ": oracle says not discrete");
        f.expect(jacobson_and_prime_meets(s).j_irredundant, what + ": Jacobson meet redundant");
        // Dropping any maximal ideal from the intersection must enlarge it.
        const auto maxes = sorted_masks(rep.max);
        Mask j = oracle::bit(n) - 1;
        for (Mask m : maxes) j &= m;
        for (std::size_t k = 0; k < maxes.size(); ++k) {
            Mask rest = oracle::bit(n) - 1;
            for (std::size_t l = 0; l < maxes.size(); ++l) {
                if (l != k) rest &= maxes[l];
            }
            f.expect(rest != j, what + ": oracle finds a redundant maximal ideal");
        }
    }
    return f;
}

Failures xtop_criteria() {
    Failures f;
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const auto& l : lattices_up_to_iso(n)) {
            for (Mask m = 0; m < oracle::bit(n); ++m) {
                if (oracle::has(m, l.top())) continue;
                ElementSet x;
                for (Index a = 0; a < n; ++a) {
                    if (oracle::has(m, a)) x.insert(a);
                }
                std::set<Mask> family;
                for (Index a = 0; a < n; ++a) {
                    Mask v = 0;
                    for (Index b = 0; b < n; ++b) {
                        if (oracle::has(m, b) && l.leq(a, b)) v |= oracle::bit(b);
                    }
                    family.insert(v);
                }
                const bool u = is_xtop_by_unions(l, x);
                const bool irr = is_xtop_by_irreducibility(l, x);
                const std::string what = "lattice of size " + std::to_string(n) + " X=" + to_string(x);
                f.expect(u == irr, what + ": criteria disagree");
                f.expect(u == oracle::union_closed(family), what + ": union test vs oracle");
            }
        }
    }
    return f;
}

Failures cross_check_sweep() {
    Failures f;
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const auto& p : posets_up_to_iso(n)) {
            const auto s = XTopSpace::from_poset(p);
            for (const auto& c : cross_check(s)) {
                f.expect(c.holds, "poset of size " + std::to_string(n) + ": " + c.id + " " + c.witness);
            }
            axioms_match_oracle(f, s, separation_report(s), "poset of size " + std::to_string(n));
        }
    }
    return f;
}

Failures forest_theorem() {
    using K = ForestComponent::Kind;
    Failures f;
    for (const auto& spec : forests_up_to(9, {K::Tree, K::DualTree, K::Chain})) {
        const std::string what = to_string(spec);
        bool trees_only = true, has_vee = false, only_tv = true, has_t = false, has_v = false;
        for (const auto& c : spec) {
            const bool c2 = (c.kind == K::Chain && c.n == 2) || (c.kind == K::Tree && c.n == 1) ||
                            (c.kind == K::DualTree && c.n == 1);
            trees_only = trees_only && c.kind == K::Tree && c.n >= 2;
            has_vee = has_vee || c.kind == K::DualTree || c2;
            only_tv = only_tv && (c.kind == K::Tree || c.kind == K::DualTree);
            has_t = has_t || c.kind == K::Tree;
            has_v = has_v || c.kind == K::DualTree;
        }
        if (!trees_only && !has_vee && !(only_tv && has_t && has_v)) continue;
        const auto s = XTopSpace::from_poset(forest(spec));
        const auto r = separation_report(s);
        if (trees_only) f.expect(r.t_threequarter && !r.t1, what + ": expected T3/4 and not T1");
        if (has_vee) f.expect(!r.t_threequarter, what + ": expected not T3/4");
        if (only_tv && has_t && has_v) f.expect(r.t_half, what + ": expected T1/2");
        axioms_match_oracle(f, s, r, what);
    }
    return f;
}

Failures property_suite() {
    Failures f;
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const auto& p : posets_up_to_iso(n)) {
            const std::string what = "poset of size " + std::to_string(n);
            const auto s = XTopSpace::from_poset(p);
            const auto t = oracle::library_topology(s);
            const auto k = oracle::kuratowski_violation(t);
            f.expect(k.empty(), what + ": " + k);
            for (Mask m = 0; m <= t.full(); ++m) {
                const auto y = oracle::from_mask(s, t, m);
                f.expect(oracle::to_mask(s, t, s.closure(y)) == oracle::closure(t, m), what + ": closure");
            }
            const auto& l = s.lattice();
            for (Index a = 0; a < l.size(); ++a) {
                for (Index b = 0; b < l.size(); ++b) {
                    f.expect(s.variety(l.join(a, b)) == (s.variety(a) & s.variety(b)), what + ": V(a v b)");
                }
            }
            for (Index i = 0; i < p.size(); ++i) {
                ElementSet down, up;
                for (Index j = 0; j < p.size(); ++j) {
                    if (p.leq(j, i)) down.insert(s.point(p.label(j)));
                    if (p.leq(i, j)) up.insert(s.point(p.label(j)));
                }
                const Index x = s.point(p.label(i));
                f.expect(s.kernel(x) == down, what + ": kernel of " + p.label(i));
                f.expect(s.closure(ElementSet{x}) == up, what + ": closure of " + p.label(i));
            }
            const auto c = components(s);
            for (Index x : s.point_list()) {
                const auto in = [&](const std::vector<ElementSet>& parts) {
                    for (const auto& part : parts) {
                        if (part.contains(x)) return part;
                    }
                    return ElementSet{};
                };
                f.expect(in(c.connected).is_subset_of(in(c.quasi)), what + ": C(x) not inside Q(x)");
            }
            f.expect(special_sets(s).csi == s.points(), what + ": CSI is not X");
        }
    }
    return f;
}

struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Failures()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "S3 golden", 1.0, s3_golden},
        {2, "B(n,i) grid, n <= 20", 30.0, bni_grid},
        {3, "B(n,i) separation axioms", 30.0, downstream_axioms},
        {4, "Z_n discrete spectra, n <= 60", 60.0, zn_discreteness},
        {5, "X-top criteria agree, lattices <= 5", 300.0, xtop_criteria},
        {6, "cross-check sweep, posets <= 6", 600.0, cross_check_sweep},
        {7, "forest axioms, total <= 9", 60.0, forest_theorem},
        {8, "closure and property suite, posets <= 6", 600.0, property_suite},
    };
    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Failures f;
        std::string crash;
        try {
            f = c.run();
        } catch (const std::exception& e) {
            crash = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs <= c.limit_s;
        const bool ok = f.items.empty() && crash.empty() && in_time;
        all = all && ok;
        std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << "  " << c.name << "  ("
                  << std::fixed << std::setprecision(2) << secs << " s, limit " << c.limit_s << " s)\n";
        if (!crash.empty()) std::cout << "  exception: " << crash << "\n";
        if (!in_time) std::cout << "  over the time limit\n";
        for (std::size_t k = 0; k < std::min<std::size_t>(f.items.size(), 10); ++k) {
            std::cout << "  " << f.items[k] << "\n";
        }
        if (f.items.size() > 10) std::cout << "  ... " << f.items.size() - 10 << " more\n";
    }
    return all ? 0 : 1;
}
