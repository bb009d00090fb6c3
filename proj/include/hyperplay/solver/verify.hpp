#pragma once

#include "hyperplay/game/arena.hpp"
#include "hyperplay/solver/strategy.hpp"

#include <string>

namespace hyperplay::solver {

struct verification
{
    bool ok = false;
    std::string diagnostic;

    explicit operator bool() const noexcept { return ok; }
};

// Independent certificate check: restricts `who`'s nodes to the strategy's
// move, keeps every opponent move, and accepts iff every cycle reachable
// from `from` has a maximum priority winning for `who`. For each priority d
// losing for `who`, the subgraph of reachable nodes with priority <= d must
// have no cycle through a node of priority d.
verification verify_strategy(const game::arena& a, const strategy& s, node_id from, player who = player::existential);

// The existential strategy restricted to the existential nodes reachable from
// `initial` under it. Throws hyperplay::error(no_winning_strategy) when the
// universal player wins `initial`.
strategy extract_reachable_strategy(const game::arena& a, const solve_result& result, node_id initial);

} // namespace hyperplay::solver
