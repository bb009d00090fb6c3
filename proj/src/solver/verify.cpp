#include "hyperplay/solver/verify.hpp"

#include "hyperplay/core/error.hpp"
#include "hyperplay/core/graph.hpp"

#include <algorithm>

namespace hyperplay::solver {

verification verify_strategy(const game::arena& a, const strategy& s, node_id from, player who)
{
    if (from >= a.size())
        return {false, "start node " + std::to_string(from) + " does not exist"};

    graph::adjacency restricted(a.size());
    std::vector<node_id> order{from};
    std::vector<char> reached(a.size(), 0);
    reached[from] = 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const node_id v = order[i];
        if (a.owner[v] == who) {
            const auto w = s.move(v);
            if (!w)
                return {false, "strategy has no move at reachable node " + std::to_string(v)};
            if (!a.has_edge(v, *w))
                return {false, "strategy move " + std::to_string(v) + " -> " + std::to_string(*w) + " is not an edge"};
            restricted[v] = {*w};
        } else {
            restricted[v] = a.succ[v];
        }
        for (node_id w : restricted[v]) {
            if (!reached[w]) {
                reached[w] = 1;
                order.push_back(w);
            }
        }
    }

    priority top = 0;
    for (node_id v : order)
        top = std::max(top, a.prio[v]);
    for (priority d = 0; d <= top; ++d) {
        if (game::winner_of(d) == who)
            continue;
        std::vector<char> active(a.size(), 0);
        bool present = false;
        for (node_id v : order) {
            active[v] = a.prio[v] <= d;
            present = present || a.prio[v] == d;
        }
        if (!present)
            continue;
        const auto scc = graph::strongly_connected_components(restricted, active);
        for (node_id v : order) {
            if (a.prio[v] == d && scc.cyclic[scc.component[v]])
                return {false, "reachable cycle through node " + std::to_string(v) + " has losing maximum priority " +
                                   std::to_string(d)};
        }
    }
    return {true, {}};
}

strategy extract_reachable_strategy(const game::arena& a, const solve_result& result, node_id initial)
{
    if (!result.wins(player::existential, initial))
        throw error(errc::no_winning_strategy, "no winning strategy: the universal player wins the initial node");
    strategy out(a.size());
    std::vector<char> seen(a.size(), 0);
    std::vector<node_id> order{initial};
    seen[initial] = 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const node_id v = order[i];
        std::vector<node_id> next;
        if (a.owner[v] == player::existential) {
            const node_id w = result.existential.at(v);
            out.set(v, w);
            next.push_back(w);
        } else {
            next = a.succ[v];
        }
        for (node_id w : next) {
            if (!seen[w]) {
                seen[w] = 1;
                order.push_back(w);
            }
        }
    }
    return out;
}

} // namespace hyperplay::solver
