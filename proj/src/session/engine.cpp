#include "hyperplay/session/engine.hpp"

#include "hyperplay/game/winning_condition.hpp"
#include "hyperplay/solver/verify.hpp"
#include "hyperplay/solver/zielonka.hpp"

namespace hyperplay::session {

namespace {

struct pipeline
{
    formula effective;
    automata::dpa dpa;
    std::optional<automata::dpa> monitor;
    std::vector<bool> monitor_empty;
};

pipeline automata_stage(const hyper_problem& problem, const engine_options& options)
{
    const automata::determinize_options det{.state_budget = options.state_budget, .allow_fast_path = true};
    pipeline p;
    p.effective = game::effective_formula(problem);
    p.dpa = automata::ltl_to_dpa(p.effective, game::game_alphabet(problem), det);
    if (!problem.prophecies().empty()) {
        p.monitor = automata::ltl_to_dpa(game::assumption_formula(problem), game::assumption_alphabet(problem), det);
        p.monitor_empty = automata::empty_language_states(*p.monitor);
    }
    return p;
}

} // namespace

std::shared_ptr<const engine> build_engine(const hyper_problem& problem, const engine_options& options)
{
    pipeline p = automata_stage(problem, options);
    game::parity_game g = game::build_parity_game(problem, p.dpa, {.node_budget = options.node_budget});
    solver::solve_result solution = solver::solve_zielonka(g.arena());
    std::optional<solver::strategy> strat;
    if (solution.wins(game::player::existential, g.initial()))
        strat = solver::extract_reachable_strategy(g.arena(), solution, g.initial());
    return std::make_shared<const engine>(engine{problem, std::move(p.effective), std::move(p.dpa), std::move(p.monitor),
                                                 std::move(p.monitor_empty), std::move(g), std::move(solution),
                                                 std::move(strat)});
}

} // namespace hyperplay::session
