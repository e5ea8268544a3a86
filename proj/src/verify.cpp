#include "xtop/verify.hpp"

#include <sstream>

#include "xtop/enumerate.hpp"
#include "xtop/errors.hpp"
#include "xtop/forest_spec.hpp"
#include "xtop/semiring.hpp"
#include "xtop/separation.hpp"

namespace xtop {

namespace {

void record_checks(SuiteResult& r, const std::string& what, const XTopSpace& s) {
    for (const auto& c : cross_check(s)) {
        if (!c.holds) r.failures.push_back(what + ": " + c.id + (c.witness.empty() ? "" : " [" + c.witness + "]"));
    }
}

std::string spec_name(std::size_t n, std::size_t i) {
    return "B(" + std::to_string(n) + "," + std::to_string(i) + ")";
}

}  // namespace

std::string describe_poset(const FinitePoset& p) {
    std::ostringstream os;
    os << "n=" << p.size() << " [";
    bool first = true;
    for (const auto& [a, b] : p.covers()) {
        if (!first) os << ", ";
        os << p.label(a) << "<" << p.label(b);
        first = false;
    }
    os << "]";
    return os.str();
}

SuiteResult verify_xct(std::size_t max_size) {
    SuiteResult r{"xct", 0, {}};
    for (std::size_t n = 1; n <= max_size; ++n) {
        for (const auto& lat : lattices_up_to_iso(n)) {
            const auto& order = lat.order();
            // X ranges over subsets of L \ {1}.
            std::vector<Index> rest;
            for (Index a = 0; a < n; ++a) {
                if (a != lat.top()) rest.push_back(a);
            }
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << rest.size()); ++m) {
                ElementSet x;
                for (std::size_t k = 0; k < rest.size(); ++k) {
                    if ((m >> k) & 1u) x.insert(rest[k]);
                }
                ++r.instances;
                const bool u = is_xtop_by_unions(lat, x);
                const bool irr = is_xtop_by_irreducibility(lat, x);
                if (u != irr) {
                    r.failures.push_back("lattice " + describe_poset(order) + " X=" + to_string(x) +
                                         " unions=" + std::to_string(u) + " irreducibility=" + std::to_string(irr));
                }
            }
        }
    }
    return r;
}

SuiteResult verify_quarter(std::size_t max_size) {
    SuiteResult r{"quarter", 0, {}};
    for (std::size_t n = 1; n <= max_size; ++n) {
        for (const auto& p : posets_up_to_iso(n)) {
            ++r.instances;
            record_checks(r, "poset " + describe_poset(p), XTopSpace::from_poset(p));
        }
    }
    return r;
}

SuiteResult verify_discrete(std::size_t max_n, std::size_t max_size) {
    SuiteResult r{"discrete", 0, {}};
    for (std::size_t n = 4; n <= max_n; ++n) {
        const auto primes = prime_divisors(n);
        if (primes.size() == 1 && primes[0] == n) continue;
        ++r.instances;
        const std::string what = "Z_" + std::to_string(n);
        const XTopSpace s = spec_space(zn(n));
        const auto rep = separation_report(s);
        if (!rep.discrete) r.failures.push_back(what + ": spectrum not discrete");
        if (s.point_count() != primes.size()) r.failures.push_back(what + ": wrong number of primes");
        if (!jacobson_and_prime_meets(s).j_irredundant) r.failures.push_back(what + ": Jacobson meet redundant");
        record_checks(r, what, s);
    }
    for (std::size_t n = 1; n <= max_size; ++n) {
        ++r.instances;
        const XTopSpace s = XTopSpace::from_poset(antichain(n));
        if (!separation_report(s).discrete) r.failures.push_back("antichain " + std::to_string(n) + ": not discrete");
        record_checks(r, "antichain " + std::to_string(n), s);
    }
    return r;
}

SuiteResult verify_forest(std::size_t max_size) {
    using K = ForestComponent::Kind;
    SuiteResult r{"forest", 0, {}};
    for (const auto& spec : forests_up_to(max_size, {K::Tree, K::DualTree, K::Chain})) {
        ++r.instances;
        const std::string what = "forest " + to_string(spec);
        const XTopSpace s = XTopSpace::from_poset(forest(spec));
        const auto rep = separation_report(s);

        bool trees_only = true, has_vee = false, tv_only = true, long_chain = false;
        for (const auto& c : spec) {
            const bool two_chain = (c.kind == K::Chain && c.n == 2) || (c.kind == K::Tree && c.n == 1);
            trees_only = trees_only && c.kind == K::Tree && c.n >= 2;
            has_vee = has_vee || c.kind == K::DualTree || two_chain;
            tv_only = tv_only && (c.kind != K::Chain || c.n == 2);
            long_chain = long_chain || (c.kind == K::Chain && c.n >= 3);
        }
        if (trees_only && !(rep.t_threequarter && !rep.t1)) r.failures.push_back(what + ": expected T3/4 and not T1");
        if (has_vee && rep.t_threequarter) r.failures.push_back(what + ": dual tree present but T3/4");
        if (tv_only && !(rep.t_half && !rep.t1)) r.failures.push_back(what + ": expected T1/2 and not T1");
        if (long_chain && rep.t_quarter) r.failures.push_back(what + ": chain of length >= 3 but T1/4");
        record_checks(r, what, s);
    }
    return r;
}

SuiteResult verify_bni_grid(std::size_t max_n) {
    SuiteResult r{"bni", 0, {}};
    for (std::size_t n = 2; n <= max_n; ++n) {
        for (std::size_t i = 0; i < n; ++i) {
            ++r.instances;
            const std::string what = spec_name(n, i);
            const auto v = verify_bni(n, i);
            if (!v.match) {
                r.failures.push_back(what + ": predicted " + v.predicted_shape + " kdim " +
                                     std::to_string(v.predicted_kdim) + ", computed " + v.computed_shape + " kdim " +
                                     std::to_string(v.computed_kdim));
            }
            const XTopSpace s = spec_space(bni(n, i));
            const auto rep = separation_report(s);
            if (v.theorem_case == 1 && !(rep.discrete && rep.t2)) r.failures.push_back(what + ": expected discrete");
            if ((v.theorem_case == 2 || v.theorem_case == 3) && !(rep.t_half && !rep.t_threequarter)) {
                r.failures.push_back(what + ": expected T1/2 and not T3/4");
            }
            if (v.theorem_case == 4 && !(rep.t0 && !rep.t_quarter)) {
                r.failures.push_back(what + ": expected T0 and not T1/4");
            }
            if (v.theorem_case == 4) {
                // Removing the zero ideal leaves a tree over the primes dividing n-i.
                const auto y = separation_report(spec_space(bni(n, i), SpecSelector::DropZero));
                const bool prime_gap = omega(n - i) == 1;
                if (prime_gap && !(y.t_half && !y.t_threequarter)) {
                    r.failures.push_back(what + " without 0: expected T1/2 and not T3/4");
                }
                if (!prime_gap && !(y.t_threequarter && !y.t1)) {
                    r.failures.push_back(what + " without 0: expected T3/4 and not T1");
                }
            }
            record_checks(r, what, s);
        }
    }
    return r;
}

std::vector<SuiteResult> run_suite(const std::string& suite, const VerifyOptions& opts) {
    std::vector<SuiteResult> out;
    const bool all = suite == "all";
    if (all || suite == "xct") out.push_back(verify_xct(opts.max_size.value_or(5)));
    if (all || suite == "quarter") out.push_back(verify_quarter(opts.max_size.value_or(6)));
    if (all || suite == "discrete") out.push_back(verify_discrete(opts.max_n.value_or(60), opts.max_size.value_or(6)));
    if (all || suite == "forest") out.push_back(verify_forest(opts.max_size.value_or(9)));
    if (all || suite == "bni") out.push_back(verify_bni_grid(opts.max_n.value_or(20)));
    if (out.empty()) throw ParseError("unknown verify suite '" + suite + "'");
    return out;
}

}  // namespace xtop
