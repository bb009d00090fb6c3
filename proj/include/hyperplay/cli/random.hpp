#pragma once

#include "hyperplay/core/lasso.hpp"
#include "hyperplay/core/ltl.hpp"
#include "hyperplay/core/problem.hpp"

#include <random>
#include <vector>

namespace hyperplay::cli {

using rng = std::mt19937_64;

// Random formula with exactly `size` syntax nodes over `atoms`, drawing from
// every operator of the surface grammar.
formula random_formula(rng& gen, std::size_t size, const std::vector<atom>& atoms);

// Random formula of size uniform in [1, max_size].
formula random_formula_upto(rng& gen, std::size_t max_size, const std::vector<atom>& atoms);

// Stem length uniform in [0, max_stem], loop length in [1, max_loop]; every
// atom independently present with probability 1/2.
lasso_word random_lasso(rng& gen, const std::vector<atom>& atoms, std::size_t max_stem, std::size_t max_loop);

// The atom universe {ap_i × system_j} with APs a, b, c, ... and systems A, B, ...
std::vector<atom> atom_universe(std::size_t aps, std::size_t systems);

struct problem_bounds
{
    std::size_t max_states = 4;
    std::size_t min_universal = 1;
    std::size_t universal = 2;
    std::size_t existential = 1;
    std::size_t aps = 2;
    std::size_t max_body_size = 5;
    std::size_t max_prophecies = 1;
    std::size_t max_prophecy_size = 3;
};

hyper_problem random_problem(rng& gen, const problem_bounds& bounds);

} // namespace hyperplay::cli
