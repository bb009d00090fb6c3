#include "hyperplay/cli/random.hpp"
#include "hyperplay/core/error.hpp"
#include "hyperplay/core/lasso.hpp"
#include "hyperplay/core/ltl.hpp"

#include <doctest.h>

using namespace hyperplay;

namespace {

const std::set<std::string> systems_ab{"A", "B"};

formula parse(std::string_view text) { return parse_ltl(text, systems_ab); }

errc parse_error_code(std::string_view text)
{
    try {
        parse(text);
    } catch (const error& e) {
        return e.code();
    }
    FAIL("expected a parse error for: " << text);
    return errc::schema;
}

} // namespace

TEST_CASE("parse_ltl builds the expected trees")
{
    CHECK(parse("G (!h_B)") == G(!var("h", "B")));
    CHECK(parse("true") == tt());
    CHECK(parse("false") == ff());
    CHECK(parse("X G (a_B <-> X a_A)") == X(G(iff(var("a", "B"), X(var("a", "A"))))));
    CHECK(parse("a_A U b_A U c_A") == U(var("a", "A"), U(var("b", "A"), var("c", "A"))));
    CHECK(parse("G (o_A <-> o_B) & G (!h_B)") == (G(iff(var("o", "A"), var("o", "B"))) && G(!var("h", "B"))));
}

TEST_CASE("operator precedence and associativity")
{
    const formula a = var("a", "A");
    const formula b = var("b", "A");
    const formula c = var("c", "B");
    CHECK(parse("X a_A U b_A") == U(X(a), b));
    CHECK(parse("a_A & b_A | c_B") == ((a && b) || c));
    CHECK(parse("a_A | b_A & c_B") == (a || (b && c)));
    CHECK(parse("a_A & b_A & c_B") == ((a && b) && c));
    CHECK(parse("a_A -> b_A -> c_B") == implies(a, implies(b, c)));
    CHECK(parse("a_A <-> b_A -> c_B") == iff(a, implies(b, c)));
    CHECK(parse("a_A U b_A & c_B") == (U(a, b) && c));
    CHECK(parse("a_A R b_A U c_B") == R(a, U(b, c)));
    CHECK(parse("!!a_A") == !!a);
    CHECK(parse("(a_A)") == a);
}

TEST_CASE("atoms split at the last underscore")
{
    CHECK(parse("hi_B") == var("hi", "B"));
    CHECK(parse_error_code("h_i_B") == errc::syntax);
    CHECK(parse_error_code("h_C") == errc::unknown_system);
    CHECK(parse_error_code("h") == errc::syntax);
    CHECK(parse_error_code("_B") == errc::syntax);
}

TEST_CASE("parse errors carry positions")
{
    CHECK(parse_error_code("") == errc::empty_input);
    CHECK(parse_error_code("   ") == errc::empty_input);
    CHECK(parse_error_code("a_A &") == errc::syntax);
    CHECK(parse_error_code("(a_A") == errc::syntax);
    CHECK(parse_error_code("a_A b_A") == errc::syntax);
    CHECK(parse_error_code("a_A $ b_A") == errc::syntax);
    CHECK(parse_error_code("U a_A") == errc::syntax);

    try {
        parse("a_A & $");
        FAIL("no error");
    } catch (const error& e) {
        REQUIRE(e.position());
        CHECK(*e.position() == 6);
    }
    try {
        parse("G h_Z");
        FAIL("no error");
    } catch (const error& e) {
        CHECK(e.code() == errc::unknown_system);
        REQUIRE(e.position());
        CHECK(*e.position() == 4);
    }
}

TEST_CASE("printer output")
{
    CHECK(to_string(parse("G (!h_B)")) == "G !h_B");
    CHECK(to_string(parse("X G (a_B <-> X a_A)")) == "X G (a_B <-> X a_A)");
    CHECK(to_string(parse("(a_A U b_A) U c_B")) == "(a_A U b_A) U c_B");
    CHECK(to_string(parse("a_A U (b_A U c_B)")) == "a_A U b_A U c_B");
    CHECK(to_string(parse("a_A & (b_A & c_B)")) == "a_A & (b_A & c_B)");
    CHECK(to_string(prophecy_variable(2)) == "p2");
}

TEST_CASE("property: parse(print(f)) == f for random trees up to size 30")
{
    cli::rng gen(7);
    const auto atoms = cli::atom_universe(2, 2);
    for (int i = 0; i < 2000; ++i) {
        const formula f = cli::random_formula_upto(gen, 30, atoms);
        const std::string text = to_string(f);
        INFO(text);
        CHECK(parse(text) == f);
    }
}

TEST_CASE("property: normal forms preserve lasso semantics")
{
    cli::rng gen(11);
    const auto atoms = cli::atom_universe(2, 2);
    for (int i = 0; i < 1500; ++i) {
        const formula f = cli::random_formula_upto(gen, 10, atoms);
        const lasso_word w = cli::random_lasso(gen, atoms, 4, 3);
        const formula core = to_core(f);
        const formula nnf = to_nnf(f);
        INFO(to_string(f), " on ", to_string(w));
        CHECK(is_nnf(nnf));
        CHECK(eval_ltl_positions(core, w) == eval_ltl_positions(f, w));
        CHECK(eval_ltl_positions(nnf, w) == eval_ltl_positions(f, w));
    }
}

TEST_CASE("to_core uses only the core connectives")
{
    cli::rng gen(3);
    const auto atoms = cli::atom_universe(2, 2);
    auto core_only = [](const formula& f, auto& self) -> bool {
        switch (f.kind()) {
        case op::constant_true:
        case op::constant_false:
        case op::atomic:
            return true;
        case op::negation:
        case op::next:
            return self(f.lhs(), self);
        case op::conjunction:
        case op::until:
            return self(f.lhs(), self) && self(f.rhs(), self);
        default:
            return false;
        }
    };
    for (int i = 0; i < 300; ++i)
        CHECK(core_only(to_core(cli::random_formula_upto(gen, 12, atoms)), core_only));
}

TEST_CASE("atoms and systems of a formula")
{
    const formula f = parse("G (o_A <-> o_B) & G (!h_B)");
    CHECK(atoms_of(f) == std::set<atom>{{"h", "B"}, {"o", "A"}, {"o", "B"}});
    CHECK(systems_of(f) == std::set<std::string>{"A", "B"});
    CHECK(f.size() == 8);
}
