#include "hyperplay/solver/strategy.hpp"

#include "hyperplay/game/game.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hyperplay::solver {

std::optional<node_id> strategy::move(node_id v) const
{
    if (!defined(v))
        return std::nullopt;
    return moves_[v];
}

node_id strategy::at(node_id v) const
{
    if (!defined(v))
        throw std::out_of_range("strategy has no move at node " + std::to_string(v));
    return moves_[v];
}

std::size_t strategy::size() const noexcept
{
    return static_cast<std::size_t>(std::count_if(moves_.begin(), moves_.end(), [](node_id w) { return w != no_move; }));
}

std::string to_text(const game::parity_game& g, const strategy& s)
{
    std::ostringstream os;
    for (node_id v = 0; v < g.size(); ++v)
        if (auto w = s.move(v))
            os << g.key(v) << " -> " << g.key(*w) << '\n';
    return os.str();
}

std::string to_dot(const game::parity_game& g, const strategy& s, node_id from, player who)
{
    const auto& a = g.arena();
    std::vector<char> seen(a.size(), 0);
    std::vector<node_id> order{from};
    seen[from] = 1;
    std::ostringstream edges;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const node_id v = order[i];
        std::vector<node_id> next;
        if (a.owner[v] == who) {
            if (auto w = s.move(v))
                next.push_back(*w);
        } else {
            next = a.succ[v];
        }
        for (node_id w : next) {
            edges << "  n" << v << " -> n" << w << ";\n";
            if (!seen[w]) {
                seen[w] = 1;
                order.push_back(w);
            }
        }
    }
    std::sort(order.begin(), order.end());
    std::ostringstream os;
    os << "digraph strategy {\n";
    for (node_id v : order)
        os << "  n" << v << " [shape=" << (a.owner[v] == player::universal ? "box" : "diamond") << ", label=\""
           << g.key(v) << "\\n" << a.prio[v] << "\"];\n";
    os << edges.str() << "}\n";
    return os.str();
}

} // namespace hyperplay::solver
