#pragma once

#include "hyperplay/automata/alphabet.hpp"
#include "hyperplay/core/problem.hpp"

namespace hyperplay::game {

// X G ⋀_j (p_j <-> θ_j), or `true` without prophecies. Position 0 carries no
// declaration: the bits chosen with a universal move describe the position
// that move creates.
formula assumption_formula(const hyper_problem& problem);

// assumption -> body, or the body itself when there are no prophecies.
formula effective_formula(const hyper_problem& problem);

// Tracked variables of the effective formula plus every prophecy variable.
automata::alphabet game_alphabet(const hyper_problem& problem);

// Tracked variables of the assumption (universal atoms and prophecy variables).
automata::alphabet assumption_alphabet(const hyper_problem& problem);

} // namespace hyperplay::game
