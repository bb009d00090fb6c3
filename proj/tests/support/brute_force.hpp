#pragma once

#include "hyperplay/core/problem.hpp"
#include "hyperplay/game/arena.hpp"

#include <vector>

namespace hyperplay::testing {

// Winner of every node by enumerating all memoryless strategy pairs: the
// existential player wins v iff some existential strategy makes every
// universal strategy's play from v end in a cycle with an even maximum.
std::vector<game::player> brute_force_winners(const game::arena& a);

// For problems without universal systems: true iff some lasso path of the
// product of all systems, with stem + loop length at most `max_length`,
// satisfies the body.
bool some_lasso_satisfies(const hyper_problem& problem, std::size_t max_length);

} // namespace hyperplay::testing
