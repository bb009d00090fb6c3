#include "hyperplay/core/error.hpp"
#include "hyperplay/core/problem.hpp"
#include "support/fixtures.hpp"

#include <doctest.h>

using namespace hyperplay;
using nlohmann::json;

namespace {

errc problem_error(const json& doc)
{
    try {
        parse_problem(doc);
    } catch (const error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return errc::schema;
}

} // namespace

TEST_CASE("example 1 document parses")
{
    const hyper_problem p = testing::load_fixture("example1.json");
    REQUIRE(p.systems().size() == 2);
    CHECK(p.universal_count() == 1);
    CHECK(p.existential_count() == 1);
    CHECK(p.systems()[0].system.name() == "A");
    CHECK(p.systems()[1].quant == quantifier::exists);
    CHECK(p.body() == parse_ltl("G (o_A <-> o_B) & G (!h_B)", {"A", "B"}));
    CHECK(p.systems()[0].system.states().size() == 5);
    CHECK(p.systems()[0].system.labels(1) == std::set<std::string>{"h"});
    CHECK(p.prophecies().empty());
}

TEST_CASE("problem validation errors")
{
    const json ex2 = json::parse(testing::read_fixture("example2.json"));

    SUBCASE("exists before forall")
    {
        json doc = ex2;
        std::swap(doc["systems"][0]["quantifier"], doc["systems"][1]["quantifier"]);
        CHECK(problem_error(doc) == errc::quantifier_prefix);
    }
    SUBCASE("prophecy about an existential system")
    {
        json doc = ex2;
        doc["prophecies"] = {"X a_B"};
        CHECK(problem_error(doc) == errc::prophecy_scope);
    }
    SUBCASE("duplicate system names")
    {
        json doc = ex2;
        doc["systems"][1]["name"] = "A";
        CHECK(problem_error(doc) == errc::duplicate_system);
    }
    SUBCASE("empty successor set")
    {
        json doc = ex2;
        doc["systems"][0]["states"][1]["successors"] = json::array();
        CHECK(problem_error(doc) == errc::empty_successors);
    }
    SUBCASE("unknown successor")
    {
        json doc = ex2;
        doc["systems"][0]["states"][1]["successors"] = {7};
        CHECK(problem_error(doc) == errc::unknown_state);
    }
    SUBCASE("missing initial state")
    {
        json doc = ex2;
        doc["systems"][0]["initial"] = 9;
        CHECK(problem_error(doc) == errc::unknown_state);
    }
    SUBCASE("schema violations")
    {
        json doc = ex2;
        doc.erase("formula");
        CHECK(problem_error(doc) == errc::schema);
        doc = ex2;
        doc["systems"][0]["quantifier"] = "some";
        CHECK(problem_error(doc) == errc::schema);
        doc = ex2;
        doc["systems"][0]["states"][0]["id"] = -1;
        CHECK(problem_error(doc) == errc::schema);
        doc = ex2;
        doc["systems"][0]["name"] = "A_1";
        CHECK(problem_error(doc) == errc::schema);
        CHECK(problem_error(json::array()) == errc::schema);
    }
    SUBCASE("formula errors keep their code and position")
    {
        json doc = ex2;
        doc["formula"] = "G (a_A &";
        try {
            parse_problem(doc);
            FAIL("no error");
        } catch (const error& e) {
            CHECK(e.code() == errc::syntax);
            CHECK(e.position().has_value());
        }
        doc["formula"] = "G a_C";
        CHECK(problem_error(doc) == errc::unknown_system);
    }
}

TEST_CASE("APs outside every labeling are accepted")
{
    json doc = json::parse(testing::read_fixture("example2.json"));
    doc["formula"] = "G !zz_A";
    CHECK_NOTHROW(parse_problem(doc));
}

TEST_CASE("canonical JSON round-trips")
{
    const hyper_problem p = testing::load_fixture("example2_prophecy.json");
    const json doc = to_json(p);
    const hyper_problem q = parse_problem(doc);
    CHECK(to_json(q) == doc);
    CHECK(doc["prophecies"] == json::array({"X a_A"}));
}

TEST_CASE("malformed JSON text")
{
    try {
        parse_problem_text("{\"systems\": [");
        FAIL("no error");
    } catch (const error& e) {
        CHECK(e.code() == errc::schema);
    }
}
