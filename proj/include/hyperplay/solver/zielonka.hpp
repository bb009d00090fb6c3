#pragma once

#include "hyperplay/game/arena.hpp"
#include "hyperplay/solver/strategy.hpp"

namespace hyperplay::solver {

// Zielonka's recursive algorithm under the max-even condition. Attractor
// strategies take the first successor, in edge order, already inside the
// attractor, so results depend only on the arena.
solve_result solve_zielonka(const game::arena& a);

} // namespace hyperplay::solver
