#pragma once

#include "hyperplay/automata/dpa.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hyperplay::game {

// The existential player is the even player of the max-even condition.
enum class player : std::uint8_t { existential, universal };

using node_id = std::uint32_t;
using automata::priority;

[[nodiscard]] constexpr player opponent(player p) noexcept
{
    return p == player::existential ? player::universal : player::existential;
}

// Player who wins a play whose highest recurring priority is `p`.
[[nodiscard]] constexpr player winner_of(priority p) noexcept
{
    return p % 2 == 0 ? player::existential : player::universal;
}

std::string_view to_string(player p) noexcept;

// Plain parity game graph. Successor lists are kept in the order the
// builder emits them; solvers break ties by that order.
struct arena
{
    std::vector<player> owner;
    std::vector<priority> prio;
    std::vector<std::vector<node_id>> succ;

    [[nodiscard]] std::size_t size() const noexcept { return owner.size(); }
    node_id add_node(player who, priority p);
    void add_edge(node_id from, node_id to) { succ.at(from).push_back(to); }
    [[nodiscard]] bool has_edge(node_id from, node_id to) const;
    // Throws std::invalid_argument on dangling edges or dead ends.
    void validate() const;
};

std::string to_dot(const arena& a);

} // namespace hyperplay::game
