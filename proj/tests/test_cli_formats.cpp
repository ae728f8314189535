#include "doctest.h"

#include "gbg/json_io.hpp"
#include "gbg/presentation.hpp"

using namespace gbg;

TEST_CASE("quotient spec parsing") {
    QuotientSpec q = quotient_spec_from_json(
        "{\"kill\": [\"gamma1\"], \"identify\": [[\"a\", \"b\"]]}");
    REQUIRE(q.kill.size() == 1);
    CHECK(q.kill[0] == "gamma1");
    REQUIRE(q.identify.size() == 1);
    CHECK(q.identify[0].first == "a");
    CHECK_THROWS_AS(quotient_spec_from_json("nope"), input_error);
}

TEST_CASE("presentation serialization formats") {
    Presentation p;
    p.gens = {"g1", "g2", "g3"};
    p.relators = {Word(std::vector<int>{3, -1, 2})};
    std::string txt = p.to_text();
    CHECK(txt.find("g3 g1^-1 g2") != std::string::npos);
    std::string js = p.to_json();
    CHECK(js.find("\"generators\"") != std::string::npos);
    CHECK(js.find("\"relators\"") != std::string::npos);
}

TEST_CASE("all bundled fixtures parse and validate") {
    for (const auto& name : fixture_names()) {
        GraphBundle b = fixture(name);
        b.g.validate();
        CHECK(b.g.is_connected());
    }
    CHECK_THROWS_AS(fixture("nope"), input_error);
}
