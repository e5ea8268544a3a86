#include <doctest.h>

#include "xtop/dot.hpp"
#include "xtop/errors.hpp"
#include "xtop/forest_spec.hpp"
#include "xtop/json_io.hpp"

using namespace xtop;

TEST_CASE("poset JSON round trip") {
    const auto p = forest(parse_forest_spec("T2+V2"));
    const auto q = poset_from_json(to_json(p));
    CHECK(q.labels() == p.labels());
    CHECK(q.matrix() == p.matrix());
}

TEST_CASE("space JSON round trip") {
    const auto s = XTopSpace::from_poset(forest(parse_forest_spec("T2+C2")));
    const auto j = to_json(s);
    const auto t = space_from_json(j);
    CHECK(t.open_family() == s.open_family());
    CHECK(t.points() == s.points());

    auto bad = j;
    bad["closed_sets"].erase(bad["closed_sets"].begin());
    CHECK_THROWS_AS(space_from_json(bad), ParseError);
}

TEST_CASE("semiring JSON round trip") {
    const auto r = bni(7, 3);
    const auto q = semiring_from_json(to_json(r));
    CHECK(q.add_table() == r.add_table());
    CHECK(q.mul_table() == r.mul_table());
    CHECK(q.one() == r.one());
}

TEST_CASE("malformed JSON") {
    CHECK_THROWS_AS(poset_from_json(Json::parse("[1, 2]")), ParseError);
    CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"labels": ["a"], "leq": [["a"]]})")), ParseError);
    CHECK_THROWS_AS(semiring_from_json(Json::parse(R"({"labels": ["0"], "add": [[0]]})")), ParseError);
    CHECK_THROWS_AS(load_json_file("/nonexistent/file.json"), ParseError);
}

TEST_CASE("DOT output") {
    const auto p = FinitePoset::from_relation({"a", "b\"q"}, {{"a", "b\"q"}});
    const auto dot = hasse_dot(p);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("rankdir=BT") != std::string::npos);
    CHECK(dot.find("b\\\"q") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
    const auto s = XTopSpace::from_poset(forest(parse_forest_spec("V2")));
    CHECK(space_dot(s, true).find("closed") != std::string::npos);
}
