#include "xtop/separation.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <unordered_set>

#include "xtop/errors.hpp"

namespace xtop {

namespace {

using Mask = std::uint64_t;

inline Mask bit(std::size_t i) { return Mask{1} << i; }
inline bool has(Mask m, std::size_t i) { return (m >> i) & 1u; }

// Point-local view of a space: point i is s.point_list()[i] and every point
// set is a bitmask over those positions. Kernels and singleton closures are
// taken straight from the open and closed families.
struct Frame {
    const XTopSpace& s;
    const FiniteLattice& l;
    std::size_t n;
    std::vector<Index> pts;
    Mask full = 0;
    std::vector<Mask> up;    // up[i]: points j with pts[i] <= pts[j]
    std::vector<Mask> down;  // down[i]: points j with pts[j] <= pts[i]
    std::vector<Mask> opens;
    std::vector<Mask> closeds;
    std::unordered_set<Mask> open_set;
    std::unordered_set<Mask> closed_set;
    std::vector<Mask> ker;     // intersection of opens containing i
    std::vector<Mask> cl_pt;   // intersection of closeds containing i
    std::vector<Index> meet_of;  // meet_of[S]: lattice meet of the points in S

    explicit Frame(const XTopSpace& space)
        : s(space), l(space.lattice()), n(space.point_count()), pts(space.point_list()) {
        if (n > kMaxBruteForcePoints) {
            throw TooLargeError("space has " + std::to_string(n) + " points; exhaustive analysis is capped at " +
                                std::to_string(kMaxBruteForcePoints));
        }
        full = n == 64 ? ~Mask{0} : bit(n) - 1;
        up.assign(n, 0);
        down.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (l.leq(pts[i], pts[j])) {
                    up[i] |= bit(j);
                    down[j] |= bit(i);
                }
            }
        }
        for (const auto& u : s.open_family()) opens.push_back(mask(u));
        for (const auto& c : s.closed_family()) closeds.push_back(mask(c));
        open_set.insert(opens.begin(), opens.end());
        closed_set.insert(closeds.begin(), closeds.end());
        ker.assign(n, full);
        cl_pt.assign(n, full);
        for (Mask u : opens) {
            for (std::size_t i = 0; i < n; ++i) {
                if (has(u, i)) ker[i] &= u;
            }
        }
        for (Mask c : closeds) {
            for (std::size_t i = 0; i < n; ++i) {
                if (has(c, i)) cl_pt[i] &= c;
            }
        }
        meet_of.assign(std::size_t{1} << n, l.top());
        for (Mask m = 1; m < (Mask{1} << n); ++m) {
            const int low = std::countr_zero(m);
            meet_of[m] = l.meet(meet_of[m & (m - 1)], pts[low]);
        }
    }

    Mask mask(const ElementSet& y) const {
        Mask m = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (y.contains(pts[i])) m |= bit(i);
        }
        return m;
    }

    ElementSet set(Mask m) const {
        ElementSet out;
        for (std::size_t i = 0; i < n; ++i) {
            if (has(m, i)) out.insert(pts[i]);
        }
        return out;
    }

    std::string name(std::size_t i) const { return l.label(pts[i]); }

    std::string name_set(Mask m) const {
        std::string out = "{";
        bool first = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (!has(m, i)) continue;
            if (!first) out += ',';
            out += name(i);
            first = false;
        }
        return out + "}";
    }

    // Topological closure: smallest closed set containing m.
    Mask closure(Mask m) const {
        Mask c = full;
        for (Mask f : closeds) {
            if ((m & ~f) == 0) c &= f;
        }
        return c;
    }

    // Topological interior: union of opens contained in m.
    Mask interior(Mask m) const {
        Mask in = 0;
        for (Mask u : opens) {
            if ((u & ~m) == 0) in |= u;
        }
        return in;
    }

    bool leq_lat(Index a, std::size_t i) const { return l.leq(a, pts[i]); }
};

struct Sets {
    Mask min = 0, max = 0, si = 0, csi = 0, amin = 0, bmax = 0;
    Mask iso = 0, ro = 0, cl = 0, k = 0, excl = 0;
};

Sets compute_sets(const Frame& f) {
    Sets r;
    const std::size_t n = f.n;
    for (std::size_t i = 0; i < n; ++i) {
        if (f.down[i] == bit(i)) r.min |= bit(i);
        if (f.up[i] == bit(i)) r.max |= bit(i);
    }
    for (std::size_t x = 0; x < n; ++x) {
        // Pairs a, b (a = b included) of points.
        bool si = true;
        for (std::size_t a = 0; a < n && si; ++a) {
            for (std::size_t b = a; b < n && si; ++b) {
                if (f.leq_lat(f.l.meet(f.pts[a], f.pts[b]), x) && !has(f.down[x], a) && !has(f.down[x], b)) {
                    si = false;
                }
            }
        }
        if (si) r.si |= bit(x);

        bool csi = true;
        for (Mask a = 0; a < (Mask{1} << n) && csi; ++a) {
            if ((a & f.down[x]) == 0 && f.leq_lat(f.meet_of[a], x)) csi = false;
        }
        if (csi) r.csi |= bit(x);
    }
    for (std::size_t q = 0; q < n; ++q) {
        if (has(r.min, q) && !f.leq_lat(f.meet_of[r.min & ~bit(q)], q)) r.amin |= bit(q);
        if (has(r.max, q) && !f.leq_lat(f.meet_of[r.max & ~bit(q)], q)) r.bmax |= bit(q);
    }
    for (std::size_t x = 0; x < n; ++x) {
        if (f.open_set.contains(bit(x))) r.iso |= bit(x);
        if (f.closed_set.contains(bit(x))) r.cl |= bit(x);
        if (f.ker[x] == bit(x)) r.k |= bit(x);
        if (f.interior(f.cl_pt[x]) == bit(x)) r.ro |= bit(x);
        if (f.s.excluded_meet(f.pts[x]).is_excluded) r.excl |= bit(x);
    }
    return r;
}

std::size_t kdim_of(const Frame& f) {
    if (f.n == 0) return 0;
    std::vector<std::size_t> order(f.n);
    for (std::size_t i = 0; i < f.n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::popcount(f.down[a]) < std::popcount(f.down[b]);
    });
    std::vector<std::size_t> h(f.n, 0);
    std::size_t best = 0;
    for (std::size_t y : order) {
        for (std::size_t x = 0; x < f.n; ++x) {
            if (x != y && has(f.down[y], x)) h[y] = std::max(h[y], h[x] + 1);
        }
        best = std::max(best, h[y]);
    }
    return best;
}

struct Comps {
    std::vector<Mask> c;  // per point
    std::vector<Mask> q;  // per point
};

Comps compute_components(const Frame& f) {
    const std::size_t n = f.n;
    const Mask count = Mask{1} << n;
    // Smallest open containing T: union of the kernels of its points.
    std::vector<Mask> kunion(count, 0);
    for (Mask t = 1; t < count; ++t) kunion[t] = kunion[t & (t - 1)] | f.ker[std::countr_zero(t)];

    Comps out;
    out.c.assign(n, 0);
    for (Mask s = 1; s < count; ++s) {
        // T is open in the subspace S iff it equals S ∩ (smallest open ⊇ T).
        const Mask low = s & (~s + 1);
        const Mask rest = s & ~low;
        bool split = false;
        for (Mask sub = rest;; sub = (sub - 1) & rest) {
            const Mask t = sub | low;
            if (t != s) {
                const Mask u = s & ~t;
                if ((kunion[t] & s) == t && (kunion[u] & s) == u) {
                    split = true;
                    break;
                }
            }
            if (sub == 0) break;
        }
        if (split) continue;
        for (std::size_t i = 0; i < n; ++i) {
            if (has(s, i)) out.c[i] |= s;
        }
    }

    out.q.assign(n, f.full);
    for (Mask u : f.opens) {
        if (!f.closed_set.contains(u)) continue;
        for (std::size_t i = 0; i < n; ++i) {
            if (has(u, i)) out.q[i] &= u;
        }
    }
    return out;
}

std::vector<ElementSet> partition_of(const Frame& f, const std::vector<Mask>& per_point) {
    std::vector<Mask> uniq(per_point.begin(), per_point.end());
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<ElementSet> out;
    for (Mask m : uniq) out.push_back(f.set(m));
    sort_canonical(out);
    return out;
}

bool complete_max_on_radicals(const XTopSpace& s) {
    const auto& l = s.lattice();
    ElementSet c = radical_info(l, s.points()).radical_elements;
    c.erase(l.top());
    return has_complete_max_property(EmbeddedSubset(s.lattice_ptr(), c));
}

SeparationReport report_of(const Frame& f, const Sets& sets) {
    const std::size_t n = f.n;
    const Mask count = Mask{1} << n;
    SeparationReport r;
    r.kdim = kdim_of(f);

    // Ker(x) is the smallest open containing x, so "some open contains x
    // but not y" is y ∉ Ker(x), and x, y have disjoint open neighbourhoods
    // iff Ker(x) ∩ Ker(y) = ∅.
    auto sep_one = [&](std::size_t x, std::size_t y) { return !has(f.ker[x], y); };
    auto disjoint = [&](std::size_t x, std::size_t y) { return (f.ker[x] & f.ker[y]) == 0; };

    r.t0 = r.t1 = r.t2 = r.r0 = r.r1 = true;
    r.quasi_hausdorff = true;
    bool any_disjoint_pair = false;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (x == y) continue;
            const bool distinguishable = sep_one(x, y) || sep_one(y, x);
            const bool separated = sep_one(x, y) && sep_one(y, x);
            if (!distinguishable) r.t0 = false;
            if (!separated) r.t1 = false;
            if (!disjoint(x, y)) r.t2 = false;
            if (distinguishable && !separated) r.r0 = false;
            if (distinguishable && !disjoint(x, y)) r.r1 = false;
            if (disjoint(x, y)) any_disjoint_pair = true;
            if (!disjoint(x, y)) {
                bool common = false;
                for (std::size_t z = 0; z < n && !common; ++z) {
                    common = has(f.cl_pt[z], x) && has(f.cl_pt[z], y);
                }
                if (!common) r.quasi_hausdorff = false;
            }
        }
    }

    r.t_quarter = (sets.cl | sets.k) == f.full;
    r.t_half = (sets.cl | sets.iso) == f.full;
    r.t_threequarter = (sets.cl | sets.ro) == f.full;
    r.discrete = sets.iso == f.full;

    // Every subset of a finite space is compact.
    r.t1half_kc = true;
    for (Mask m = 0; m < count && r.t1half_kc; ++m) r.t1half_kc = f.closed_set.contains(m);

    {
        std::vector<Mask> kunion(count, 0);
        for (Mask t = 1; t < count; ++t) kunion[t] = kunion[t & (t - 1)] | f.ker[std::countr_zero(t)];
        r.tf = true;
        for (std::size_t x = 0; x < n && r.tf; ++x) {
            const Mask others = f.full & ~bit(x);
            for (Mask sub = others;; sub = (sub - 1) & others) {
                // {x} ⊢ F: an open around x missing F. F ⊢ {x}: an open around F missing x.
                const bool x_f = (f.ker[x] & sub) == 0;
                const bool f_x = !has(kunion[sub], x);
                if (!x_f && !f_x) {
                    r.tf = false;
                    break;
                }
                if (sub == 0) break;
            }
        }
    }

    r.es = ((sets.min & ~sets.max) & ~sets.csi) == 0;

    // Nonempty Y is irreducible iff any two nonempty relatively open subsets
    // meet; every such subset contains some Ker(y) ∩ Y.
    auto irreducible_set = [&](Mask y) {
        if (y == 0) return false;
        for (std::size_t a = 0; a < n; ++a) {
            if (!has(y, a)) continue;
            for (std::size_t b = a + 1; b < n; ++b) {
                if (has(y, b) && (f.ker[a] & f.ker[b] & y) == 0) return false;
            }
        }
        return true;
    };
    r.irreducible = irreducible_set(f.full);
    r.anti_t2 = n >= 2 && !any_disjoint_pair;

    r.sober = true;
    for (Mask c : f.closeds) {
        if (!irreducible_set(c)) continue;
        std::size_t generic = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (has(c, i) && f.cl_pt[i] == c) ++generic;
        }
        if (generic != 1) r.sober = false;
    }
    r.spectral = r.t0;

    const Comps comps = compute_components(f);
    r.connected = true;
    for (Mask u : f.opens) {
        if (u != 0 && u != f.full && f.closed_set.contains(u)) r.connected = false;
    }
    r.totally_disconnected = r.totally_separated = true;
    r.ind_zero_dim = true;
    for (std::size_t x = 0; x < n; ++x) {
        if (comps.c[x] != bit(x)) r.totally_disconnected = false;
        if (comps.q[x] != bit(x)) r.totally_separated = false;
        // Clopens are closed under finite intersection, so Q(x) is the
        // smallest clopen around x; a clopen base exists iff it fits in Ker(x).
        if ((comps.q[x] & ~f.ker[x]) != 0) r.ind_zero_dim = false;
    }
    r.stone = r.t0 && r.ind_zero_dim;
    r.components = partition_of(f, comps.c);
    r.quasicomponents = partition_of(f, comps.q);

    r.amin = sets.amin == sets.min;
    r.bmax = sets.bmax == sets.max;
    r.pamin = sets.amin == f.full;
    r.pbmax = sets.bmax == f.full;
    r.complete_max_property = complete_max_on_radicals(f.s);
    return r;
}

MeetInfo meets_of(const Frame& f, const Sets& sets) {
    MeetInfo m{};
    m.jacobson = f.meet_of[sets.max];
    m.prime = f.meet_of[sets.min];
    m.j_irredundant = m.q_irredundant = true;
    for (std::size_t i = 0; i < f.n; ++i) {
        if (has(sets.max, i) && f.meet_of[sets.max & ~bit(i)] == m.jacobson) m.j_irredundant = false;
        if (has(sets.min, i) && f.meet_of[sets.min & ~bit(i)] == m.prime) m.q_irredundant = false;
    }
    return m;
}

// Order components of X, each as a mask.
std::vector<Mask> order_components_of(const Frame& f) {
    std::vector<Mask> out;
    Mask seen = 0;
    for (std::size_t i = 0; i < f.n; ++i) {
        if (has(seen, i)) continue;
        Mask comp = bit(i);
        Mask frontier = comp;
        while (frontier) {
            Mask next = 0;
            for (std::size_t j = 0; j < f.n; ++j) {
                if (has(frontier, j)) next |= f.up[j] | f.down[j];
            }
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

enum class Shape { Point, Tree, DualTree, Other };

// Tree: one maximal over at least two minimals, height 1. DualTree: one
// minimal under at least one maximal, height 1 (this covers the 2-chain).
Shape shape_of(const Frame& f, Mask comp) {
    const int size = std::popcount(comp);
    if (size == 1) return Shape::Point;
    int mins = 0, maxs = 0;
    for (std::size_t i = 0; i < f.n; ++i) {
        if (!has(comp, i)) continue;
        const bool is_min = f.down[i] == bit(i);
        const bool is_max = f.up[i] == bit(i);
        if (!is_min && !is_max) return Shape::Other;
        mins += is_min;
        maxs += is_max;
    }
    if (maxs == 1 && mins == size - 1 && mins >= 2) return Shape::Tree;
    if (mins == 1 && maxs == size - 1) return Shape::DualTree;
    return Shape::Other;
}

class Checker {
public:
    explicit Checker(const Frame& f) : f_(f) {}

    void expect(std::string id, bool holds, std::string witness = {}) {
        out_.push_back({std::move(id), holds, holds ? std::string{} : std::move(witness)});
    }

    void same_set(std::string id, Mask a, Mask b) {
        const Mask diff = a ^ b;
        std::string w;
        if (diff) w = "x=" + f_.name(static_cast<std::size_t>(std::countr_zero(diff)));
        expect(std::move(id), diff == 0, std::move(w));
    }

    // Every listed flag agrees with the first.
    void same_truth(std::string id, std::initializer_list<std::pair<const char*, bool>> sides) {
        bool ok = true;
        const bool first = sides.begin()->second;
        std::string w;
        for (const auto& [name, v] : sides) {
            if (v != first) ok = false;
            if (!w.empty()) w += ' ';
            w += std::string(name) + "=" + (v ? "1" : "0");
        }
        expect(std::move(id), ok, std::move(w));
    }

    std::vector<CheckResult> take() { return std::move(out_); }

private:
    const Frame& f_;
    std::vector<CheckResult> out_;
};

}  // namespace

SpecialSets special_sets(const XTopSpace& s) {
    const Frame f(s);
    const Sets r = compute_sets(f);
    return {f.set(r.min), f.set(r.max), f.set(r.si), f.set(r.csi), f.set(r.amin), f.set(r.bmax),
            f.set(r.iso), f.set(r.ro), f.set(r.cl), f.set(r.k), f.set(r.excl)};
}

std::vector<PointFlags> classify_points(const XTopSpace& s) {
    const Frame f(s);
    const Sets r = compute_sets(f);
    std::vector<PointFlags> out;
    for (std::size_t i = 0; i < f.n; ++i) {
        PointFlags p;
        p.point = f.pts[i];
        p.is_closed = has(r.cl, i);
        p.is_kerneled = has(r.k, i);
        p.is_isolated = has(r.iso, i);
        p.is_regular_open = has(r.ro, i);
        p.is_excluded = has(r.excl, i);
        p.is_min = has(r.min, i);
        p.is_max = has(r.max, i);
        p.in_si = has(r.si, i);
        p.in_csi = has(r.csi, i);
        p.is_abs_min = has(r.amin, i);
        p.is_barely_max = has(r.bmax, i);
        out.push_back(p);
    }
    return out;
}

SeparationReport separation_report(const XTopSpace& s) {
    const Frame f(s);
    return report_of(f, compute_sets(f));
}

Components components(const XTopSpace& s) {
    const Frame f(s);
    const Comps c = compute_components(f);
    return {partition_of(f, c.c), partition_of(f, c.q)};
}

MeetInfo jacobson_and_prime_meets(const XTopSpace& s) {
    const Frame f(s);
    return meets_of(f, compute_sets(f));
}

std::size_t krull_dim(const XTopSpace& s) {
    const Frame f(s);
    return kdim_of(f);
}

std::vector<CheckResult> cross_check(const XTopSpace& s) {
    const Frame f(s);
    const Sets x = compute_sets(f);
    const SeparationReport r = report_of(f, x);
    const MeetInfo mi = meets_of(f, x);
    const std::size_t n = f.n;
    const Mask all = f.full;
    Checker c(f);

    // Point sets.
    c.same_set("closed_points_are_maximal", x.cl, x.max);
    c.same_set("kerneled_points_are_minimal", x.k, x.min);
    c.expect("ro_within_iso_within_min", (x.ro & ~x.iso) == 0 && (x.iso & ~x.min) == 0,
             f.name_set((x.ro & ~x.iso) | (x.iso & ~x.min)));
    c.same_set("iso_is_min_and_csi", x.iso, x.min & x.csi);
    c.same_set("ro_is_iso_and_excluded", x.ro, x.iso & x.excl);
    {
        Mask dform = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const Mask d = f.mask(s.covariety(f.pts[i]));
            if (f.closure(d) == (all & ~bit(i))) dform |= bit(i);
        }
        c.same_set("ro_is_closure_of_d_complement", x.ro, dform);
    }
    c.same_set("finite_csi_is_everything", x.csi, all);
    c.same_set("finite_si_is_everything", x.si, all);
    c.expect("finite_max_is_bmax", r.bmax, f.name_set(x.max & ~x.bmax));
    c.expect("finite_min_is_amin", r.amin, f.name_set(x.min & ~x.amin));
    c.expect("finite_es", r.es);

    // Low-dimensional axioms.
    const bool k0 = r.kdim == 0;
    const bool k1 = r.kdim <= 1;
    c.expect("always_t0", r.t0);
    c.same_truth("t1_r0_kdim0", {{"t1", r.t1}, {"r0", r.r0}, {"kdim0", k0}});
    c.same_truth("t2_r1_kdim0_qh", {{"t2", r.t2}, {"r1", r.r1}, {"kdim0_qh", k0 && r.quasi_hausdorff}});
    {
        const auto& l = s.lattice();
        ElementSet rad = radical_info(l, s.points()).radical_elements;
        rad.erase(l.top());
        const ElementSet rad_max = EmbeddedSubset(s.lattice_ptr(), rad).maximal();
        const ElementSet x_max = f.set(x.max);
        c.expect("max_x_is_max_radicals", rad_max == x_max, to_string(rad_max) + " vs " + to_string(x_max));
    }
    c.same_truth("t2_t1_and_qh", {{"t2", r.t2}, {"t1_qh", r.t1 && r.quasi_hausdorff}});
    c.expect("t1_implies_t2", !r.t1 || r.t2);
    c.same_truth("discrete_t1_kdim0", {{"discrete", r.discrete}, {"t1", r.t1}, {"kdim0", k0}});
    c.same_truth("kc_discrete", {{"kc", r.t1half_kc}, {"discrete", r.discrete}});
    if (n >= 2) c.same_truth("anti_t2_irreducible", {{"anti_t2", r.anti_t2}, {"irreducible", r.irreducible}});
    c.expect("spectral_implies_sober", !r.spectral || r.sober);

    // Quarter axioms.
    c.same_truth("t_quarter_kdim_le1_tf", {{"t_quarter", r.t_quarter}, {"kdim_le1", k1}, {"tf", r.tf}});
    c.same_truth("t_half_max_or_min_csi",
                 {{"t_half", r.t_half},
                  {"max_or_min_csi", (x.max | (x.min & x.csi)) == all},
                  {"kdim_le1_es", k1 && r.es},
                  {"t_quarter_es", r.t_quarter && r.es}});
    c.same_truth("t_threequarter_max_or_ro",
                 {{"t_threequarter", r.t_threequarter},
                  {"max_or_ro", (x.max | x.ro) == all},
                  {"max_or_iso_excl", (x.max | (x.iso & x.excl)) == all},
                  {"max_or_min_csi_excl", (x.max | (x.min & x.csi & x.excl)) == all}});
    c.expect("quarter_chain", (!r.t1 || r.t_threequarter) && (!r.t_threequarter || r.t_half) &&
                                  (!r.t_half || r.t_quarter) && (!r.t_quarter || r.t0));
    c.same_truth("t_quarter_t_half", {{"t_quarter", r.t_quarter}, {"t_half", r.t_half}});

    // Discreteness.
    bool min_csi_all = true, max_all = true;
    for (std::size_t i = 0; i < n; ++i) {
        min_csi_all = min_csi_all && has(x.min, i) && has(x.csi, i);
        max_all = max_all && has(x.max, i);
    }
    c.same_truth("discrete_equivalences", {{"discrete", r.discrete},
                                           {"min_and_csi", min_csi_all},
                                           {"pamin", r.pamin},
                                           {"max_and_bmax", max_all && r.bmax},
                                           {"pbmax", r.pbmax},
                                           {"t1_bmax", r.t1 && r.bmax},
                                           {"t1_cmp", r.t1 && r.complete_max_property}});
    if (r.discrete) {
        c.expect("discrete_sets_coincide", x.amin == all && x.min == all && x.max == all && x.bmax == all,
                 f.name_set(all & ~(x.amin & x.min & x.max & x.bmax)));
    }

    // Totally disconnected spaces and clopen bases.
    if (r.ind_zero_dim) {
        c.same_truth("zero_dim_equivalences", {{"totally_separated", r.totally_separated},
                                               {"totally_disconnected", r.totally_disconnected},
                                               {"t1", r.t1},
                                               {"t0", r.t0},
                                               {"t2", r.t2}});
    }
    c.same_truth("stone_equivalences", {{"stone", r.stone},
                                        {"spectral_izd", r.spectral && r.ind_zero_dim},
                                        {"spectral_ts", r.spectral && r.totally_separated},
                                        {"spectral_t2", r.spectral && r.t2},
                                        {"spectral_kc", r.spectral && r.t1half_kc},
                                        {"spectral_t1", r.spectral && r.t1},
                                        {"spectral_kdim0", r.spectral && k0}});
    {
        const Components comps = components(s);
        bool refine = true;
        std::string w;
        for (const auto& cc : comps.connected) {
            bool inside = false;
            for (const auto& q : comps.quasi) inside = inside || cc.is_subset_of(q);
            if (!inside && refine) {
                refine = false;
                w = to_string(cc);
            }
        }
        c.expect("components_refine_quasicomponents", refine, w);
    }

    // Subspaces on Max(X) and Min(X).
    {
        const XTopSpace mx = s.subspace(f.set(x.max));
        const SeparationReport rm = separation_report(mx);
        c.expect("max_subspace_t1", rm.t1);
        c.same_truth("bmax_j_irredundant_max_discrete",
                     {{"bmax", r.bmax}, {"j_irredundant", mi.j_irredundant}, {"max_discrete", rm.discrete}});
        const XTopSpace mn = s.subspace(f.set(x.min));
        const SeparationReport rn = separation_report(mn);
        c.expect("min_subspace_t1", rn.t1);
        c.same_truth("amin_min_discrete_q_irredundant",
                     {{"amin", r.amin}, {"min_discrete", rn.discrete}, {"q_irredundant", mi.q_irredundant}});
    }

    // Forest shapes.
    {
        const auto comps = order_components_of(f);
        bool all_trees = !comps.empty(), all_tv = !comps.empty(), has_vee = false;
        for (Mask m : comps) {
            const Shape sh = shape_of(f, m);
            all_trees = all_trees && sh == Shape::Tree;
            all_tv = all_tv && (sh == Shape::Tree || sh == Shape::DualTree);
            has_vee = has_vee || sh == Shape::DualTree;
        }
        if (all_trees) c.expect("tree_forest_t_threequarter_not_t1", r.t_threequarter && !r.t1);
        if (r.t_threequarter) c.expect("t_threequarter_no_dual_tree", k1 && !has_vee);
        if (all_tv) c.expect("tree_dual_tree_forest_t_half_not_t1", r.t_quarter && r.t_half && !r.t1);
    }

    // X-top tests agree, and subsets inherit the trace topology.
    c.same_truth("xtop_criteria_agree", {{"unions", is_xtop_by_unions(s.lattice(), s.points())},
                                         {"irreducibility", is_xtop_by_irreducibility(s.lattice(), s.points())}});
    if (n <= 6) {
        bool ok = true;
        std::string w;
        for (Mask y = 0; y <= all && ok; ++y) {
            try {
                const XTopSpace sub = s.subspace(f.set(y));
                std::unordered_set<Mask> traces;
                for (Mask u : f.opens) traces.insert(u & y);
                std::unordered_set<Mask> got;
                for (const auto& u : sub.open_family()) got.insert(f.mask(u));
                if (traces != got) {
                    ok = false;
                    w = "Y=" + f.name_set(y);
                }
            } catch (const NotXTopError&) {
                ok = false;
                w = "Y=" + f.name_set(y) + " not X-top";
            }
        }
        c.expect("subsets_inherit_trace_topology", ok, w);
    }
    return c.take();
}

bool all_hold(const std::vector<CheckResult>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.holds; });
}

}  // namespace xtop
