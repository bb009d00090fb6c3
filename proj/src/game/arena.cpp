#include "hyperplay/game/arena.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hyperplay::game {

std::string_view to_string(player p) noexcept
{
    return p == player::existential ? "existential" : "universal";
}

node_id arena::add_node(player who, priority p)
{
    owner.push_back(who);
    prio.push_back(p);
    succ.emplace_back();
    return static_cast<node_id>(owner.size() - 1);
}

bool arena::has_edge(node_id from, node_id to) const
{
    const auto& s = succ.at(from);
    return std::find(s.begin(), s.end(), to) != s.end();
}

void arena::validate() const
{
    if (prio.size() != size() || succ.size() != size())
        throw std::invalid_argument("arena: inconsistent sizes");
    for (node_id v = 0; v < size(); ++v) {
        if (succ[v].empty())
            throw std::invalid_argument("arena: node " + std::to_string(v) + " has no successor");
        for (node_id w : succ[v])
            if (w >= size())
                throw std::invalid_argument("arena: edge to missing node " + std::to_string(w));
    }
}

std::string to_dot(const arena& a)
{
    std::ostringstream os;
    os << "digraph arena {\n";
    for (node_id v = 0; v < a.size(); ++v)
        os << "  n" << v << " [shape=" << (a.owner[v] == player::existential ? "diamond" : "box") << ", label=\"" << v
           << " / " << a.prio[v] << "\"];\n";
    for (node_id v = 0; v < a.size(); ++v)
        for (node_id w : a.succ[v])
            os << "  n" << v << " -> n" << w << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace hyperplay::game
