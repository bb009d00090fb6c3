#include "generators.hpp"

#include <algorithm>
#include <numeric>

namespace hyperplay::testing {

game::arena random_arena(cli::rng& gen, std::size_t max_nodes, std::size_t max_degree, game::priority max_priority)
{
    auto uniform = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(gen); };
    game::arena a;
    const std::size_t n = uniform(1, max_nodes);
    for (std::size_t v = 0; v < n; ++v)
        a.add_node(uniform(0, 1) ? game::player::existential : game::player::universal,
                   static_cast<game::priority>(uniform(0, max_priority)));
    std::vector<game::node_id> all(n);
    std::iota(all.begin(), all.end(), 0);
    for (game::node_id v = 0; v < n; ++v) {
        std::shuffle(all.begin(), all.end(), gen);
        const std::size_t degree = uniform(1, std::min(max_degree, n));
        a.succ[v].assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(degree));
    }
    return a;
}

} // namespace hyperplay::testing
