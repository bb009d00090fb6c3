#include "hyperplay/cli/random.hpp"
#include "hyperplay/core/lasso.hpp"

#include <doctest.h>

using namespace hyperplay;

namespace {

const atom aA{"a", "A"};
const atom aB{"a", "B"};

// Truth at position 1 of the lasso, via the shifted word.
bool eval_at_next(const formula& f, const lasso_word& w)
{
    return eval_ltl_positions(f, w)[w.next(0)];
}

} // namespace

TEST_CASE("eval_ltl_on_lasso examples")
{
    const formula ga = G(formula::make_atom(aA));
    CHECK(eval_ltl_on_lasso(ga, {{}, {{aA}}}));
    CHECK_FALSE(eval_ltl_on_lasso(ga, {{{aA}}, {{}}}));

    // Every position of ({a_A, a_B})^ω satisfies a_B <-> X a_A.
    const formula predict = X(G(iff(formula::make_atom(aB), X(formula::make_atom(aA)))));
    CHECK(eval_ltl_on_lasso(predict, {{}, {{aA, aB}}}));
    // a_B at 1 but a_A absent at 2.
    CHECK_FALSE(eval_ltl_on_lasso(predict, {{{}, {aB}}, {{}}}));
}

TEST_CASE("until and release on short lassos")
{
    const formula a = formula::make_atom(aA);
    const formula b = formula::make_atom(aB);
    CHECK(eval_ltl_on_lasso(U(a, b), {{{aA}, {aA}, {aB}}, {{}}}));
    CHECK_FALSE(eval_ltl_on_lasso(U(a, b), {{{aA}}, {{aA}}}));  // b never comes
    CHECK(eval_ltl_on_lasso(R(a, b), {{}, {{aB}}}));            // b forever
    CHECK(eval_ltl_on_lasso(R(a, b), {{{aB}, {aA, aB}}, {{}}}));
    CHECK_FALSE(eval_ltl_on_lasso(R(a, b), {{{aB}}, {{}}}));
    CHECK(eval_ltl_on_lasso(G(F(a)), {{{}}, {{}, {aA}}}));
    CHECK_FALSE(eval_ltl_on_lasso(F(G(a)), {{{aA}}, {{}, {aA}}}));
}

TEST_CASE("property: standard one-step expansions hold on random lassos")
{
    cli::rng gen(23);
    const auto atoms = cli::atom_universe(2, 2);
    for (int i = 0; i < 1000; ++i) {
        const formula f = cli::random_formula_upto(gen, 5, atoms);
        const formula g = cli::random_formula_upto(gen, 5, atoms);
        const lasso_word w = cli::random_lasso(gen, atoms, 4, 3);
        INFO(to_string(f), " / ", to_string(g), " on ", to_string(w));
        const bool until = eval_ltl_on_lasso(U(f, g), w);
        CHECK(until == (eval_ltl_on_lasso(g, w) || (eval_ltl_on_lasso(f, w) && eval_at_next(U(f, g), w))));
        const bool globally = eval_ltl_on_lasso(G(f), w);
        CHECK(globally == (eval_ltl_on_lasso(f, w) && eval_at_next(G(f), w)));
    }
}

TEST_CASE("eval agrees with an explicit unrolling")
{
    // The word stem·loop^ω unrolled far enough that every U/G witness is found.
    cli::rng gen(5);
    const auto atoms = cli::atom_universe(1, 2);
    for (int i = 0; i < 300; ++i) {
        const formula f = cli::random_formula_upto(gen, 4, atoms);
        const lasso_word w = cli::random_lasso(gen, atoms, 3, 3);
        lasso_word unrolled;
        unrolled.stem = w.stem;
        for (int rep = 0; rep < 8; ++rep)
            unrolled.stem.insert(unrolled.stem.end(), w.loop.begin(), w.loop.end());
        unrolled.loop = w.loop;
        CHECK(eval_ltl_on_lasso(f, w) == eval_ltl_on_lasso(f, unrolled));
    }
}
