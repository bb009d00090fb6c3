#include "hyperplay/game/winning_condition.hpp"

namespace hyperplay::game {

formula assumption_formula(const hyper_problem& problem)
{
    const auto& ps = problem.prophecies();
    if (ps.empty())
        return tt();
    formula all = iff(formula::make_atom(prophecy_variable(1)), ps[0]);
    for (std::size_t j = 1; j < ps.size(); ++j)
        all = std::move(all) && iff(formula::make_atom(prophecy_variable(j + 1)), ps[j]);
    return X(G(std::move(all)));
}

formula effective_formula(const hyper_problem& problem)
{
    if (problem.prophecies().empty())
        return problem.body();
    return implies(assumption_formula(problem), problem.body());
}

namespace {

std::set<atom> with_prophecy_variables(const hyper_problem& problem, std::set<atom> vars)
{
    for (std::size_t j = 0; j < problem.prophecies().size(); ++j)
        vars.insert(prophecy_variable(j + 1));
    return vars;
}

} // namespace

automata::alphabet game_alphabet(const hyper_problem& problem)
{
    return automata::alphabet(with_prophecy_variables(problem, atoms_of(effective_formula(problem))));
}

automata::alphabet assumption_alphabet(const hyper_problem& problem)
{
    return automata::alphabet(with_prophecy_variables(problem, atoms_of(assumption_formula(problem))));
}

} // namespace hyperplay::game
