#include <doctest.h>

#include "oracles.hpp"
#include "xtop/enumerate.hpp"
#include "xtop/errors.hpp"
#include "xtop/forest_spec.hpp"
#include "xtop/separation.hpp"

using namespace xtop;

namespace {

XTopSpace forest_space(const char* spec) { return XTopSpace::from_poset(forest(parse_forest_spec(spec))); }

void compare_with_oracle(const XTopSpace& s) {
    const auto t = oracle::library_topology(s);
    const auto r = separation_report(s);
    CHECK(r.t0 == oracle::t0(t));
    CHECK(r.t1 == oracle::t1(t));
    CHECK(r.t2 == oracle::t2(t));
    CHECK(r.t_quarter == oracle::t_quarter(t));
    CHECK(r.t_half == oracle::t_half(t));
    CHECK(r.t_threequarter == oracle::t_threequarter(t));
    CHECK(r.discrete == oracle::discrete(t));
    CHECK(r.kdim == oracle::kdim(t));
}

}  // namespace

TEST_CASE("axioms agree with the definitions on small posets") {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const auto& p : posets_up_to_iso(n)) compare_with_oracle(XTopSpace::from_poset(p));
    }
}

TEST_CASE("cross checks hold on small posets") {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const auto& p : posets_up_to_iso(n)) {
            const auto checks = cross_check(XTopSpace::from_poset(p));
            for (const auto& c : checks) {
                INFO(c.id << " " << c.witness);
                CHECK(c.holds);
            }
            CHECK(all_hold(checks));
        }
    }
}

TEST_CASE("named forests") {
    auto r = separation_report(forest_space("T2+T3"));
    CHECK(r.t_threequarter);
    CHECK_FALSE(r.t1);
    r = separation_report(forest_space("T2+V2"));
    CHECK(r.t_half);
    CHECK_FALSE(r.t_threequarter);
    r = separation_report(forest_space("C3"));
    CHECK(r.t0);
    CHECK_FALSE(r.t_quarter);
    CHECK(r.kdim == 2);
    r = separation_report(forest_space("C1+C1+C1"));
    CHECK(r.discrete);
    CHECK(r.t2);
    CHECK(r.stone);
    CHECK(r.components.size() == 3);
}

TEST_CASE("point classification of a vee") {
    const auto s = forest_space("V2");
    const auto sets = special_sets(s);
    // The bottom is open, the two tops are closed.
    CHECK(sets.iso.size() == 1);
    CHECK(sets.cl.size() == 2);
    CHECK(sets.min.size() == 1);
    CHECK(sets.max.size() == 2);
    CHECK(sets.csi == s.points());
    const auto pts = classify_points(s);
    CHECK(pts.size() == 3);
}

TEST_CASE("connected components") {
    const auto s = forest_space("T2+C2+C1");
    const auto c = components(s);
    CHECK(c.connected.size() == 3);
    CHECK(c.quasi.size() == 3);
    CHECK(separation_report(forest_space("T3")).connected);
}

TEST_CASE("large spaces are refused") {
    CHECK_THROWS_AS(separation_report(XTopSpace::from_poset(chain(17))), TooLargeError);
    CHECK_NOTHROW(separation_report(XTopSpace::from_poset(chain(16))));
}
