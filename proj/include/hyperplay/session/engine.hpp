#pragma once

#include "hyperplay/automata/dpa.hpp"
#include "hyperplay/core/problem.hpp"
#include "hyperplay/game/game.hpp"
#include "hyperplay/solver/strategy.hpp"

#include <memory>
#include <optional>

namespace hyperplay::session {

struct engine_options
{
    std::size_t state_budget = automata::default_state_budget;  // DPA states
    std::size_t node_budget = game::default_node_budget;        // game nodes
};

// Everything the pipeline derives from a problem. Immutable once built and
// shared between sessions of the same problem.
struct engine
{
    hyper_problem problem;
    formula effective;                        // ψ'
    automata::dpa dpa;                        // for ψ'
    std::optional<automata::dpa> monitor;     // assumption monitor, with prophecies only
    std::vector<bool> monitor_empty;          // empty_language_states(*monitor)
    game::parity_game game;
    solver::solve_result solution;
    std::optional<solver::strategy> strategy; // reachable part, when ∃ wins

    [[nodiscard]] bool has_strategy() const noexcept { return strategy.has_value(); }
};

// normalize → DPA for ψ' → game → solve → extract. Budget overruns throw
// hyperplay::error(budget_exceeded); a lost game is not an error.
std::shared_ptr<const engine> build_engine(const hyper_problem& problem, const engine_options& options = {});

} // namespace hyperplay::session
