#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "xtop/enumerate.hpp"
#include "xtop/errors.hpp"
#include "xtop/forest_spec.hpp"
#include "xtop/poset.hpp"

using namespace xtop;

TEST_CASE("relation is closed transitively") {
    auto p = FinitePoset::from_relation({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(p.leq(p.index_of("a"), p.index_of("c")));
    CHECK_FALSE(p.leq(p.index_of("c"), p.index_of("a")));
    CHECK(p.covers().size() == 2);
    CHECK(krull_dim(p) == 2);
}

TEST_CASE("bad relations are rejected") {
    CHECK_THROWS_AS(FinitePoset::from_relation({"a", "b"}, {{"a", "b"}, {"b", "a"}}), CycleError);
    CHECK_THROWS_AS(FinitePoset::from_relation({"a", "a"}, {}), DuplicateLabelError);
    CHECK_THROWS_AS(FinitePoset::from_relation({"a"}, {{"a", "z"}}), ParseError);
    CHECK_THROWS_AS(chain(0), ZeroSizeError);
}

TEST_CASE("upsets agree with a subset scan") {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const auto& p : posets_up_to_iso(n)) {
            std::vector<oracle::Mask> got;
            for (const auto& u : upsets(p)) got.push_back(oracle::set_mask(u));
            std::sort(got.begin(), got.end());
            CHECK(got == oracle::brute_upsets(p));
        }
    }
}

TEST_CASE("canonical form ignores relabelling") {
    for (const auto& p : posets_up_to_iso(5)) {
        std::vector<Index> perm(p.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::reverse(perm.begin(), perm.end());
        std::vector<std::pair<Index, Index>> pairs;
        for (const auto& [a, b] : p.covers()) pairs.emplace_back(perm[a], perm[b]);
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < p.size(); ++i) labels.push_back("q" + std::to_string(i));
        const auto q = FinitePoset::from_index_pairs(labels, pairs);
        CHECK(is_isomorphic(p, q));
        CHECK(canonical_form(p) == canonical_form(q));
    }
}

TEST_CASE("standard shapes") {
    CHECK(tree(3).size() == 4);
    CHECK(dual_tree(2).size() == 3);
    CHECK(krull_dim(chain(4)) == 3);
    CHECK(extremes(tree(3)).maximal.size() == 1);
    CHECK(extremes(dual_tree(3)).minimal.size() == 1);
    CHECK(order_components(forest(parse_forest_spec("T2+V3+C1"))).size() == 3);
}

TEST_CASE("forest recognition round trips") {
    using K = ForestComponent::Kind;
    for (const auto& spec : forests_up_to(7, {K::Tree, K::DualTree, K::Chain})) {
        ForestSpec out;
        const auto p = forest(spec);
        REQUIRE(recognize_forest(p, out));
        CHECK(is_isomorphic(forest(out), p));
    }
    ForestSpec out;
    CHECK_FALSE(recognize_forest(FinitePoset::from_relation({"a", "b", "c", "d"},
                                                            {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}}),
                                 out));
}

TEST_CASE("forest spec grammar") {
    const auto s = parse_forest_spec(" t2 + V3+C1 ");
    REQUIRE(s.size() == 3);
    CHECK(to_string(s) == "T2+V3+C1");
    CHECK_THROWS_AS(parse_forest_spec(""), EmptySpecError);
    CHECK_THROWS_AS(parse_forest_spec("T2+"), ParseError);
    CHECK_THROWS_AS(parse_forest_spec("Q2"), ParseError);
    CHECK_THROWS_AS(parse_forest_spec("T0"), ParseError);
    CHECK_THROWS_AS(parse_forest_spec("T2 V3"), ParseError);
}
