#pragma once

#include "hyperplay/game/arena.hpp"

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace hyperplay::game {
class parity_game;
}

namespace hyperplay::solver {

using game::node_id;
using game::player;
using game::priority;

// Memoryless move map; nodes without a move are simply not in its domain.
class strategy
{
public:
    static constexpr node_id no_move = std::numeric_limits<node_id>::max();

    strategy() = default;
    explicit strategy(std::size_t nodes) : moves_(nodes, no_move) {}

    [[nodiscard]] std::size_t capacity() const noexcept { return moves_.size(); }
    [[nodiscard]] bool defined(node_id v) const noexcept { return v < moves_.size() && moves_[v] != no_move; }
    [[nodiscard]] std::optional<node_id> move(node_id v) const;
    [[nodiscard]] node_id at(node_id v) const;
    void set(node_id v, node_id w) { moves_.at(v) = w; }
    void clear(node_id v) { moves_.at(v) = no_move; }
    [[nodiscard]] std::size_t size() const noexcept;

    friend bool operator==(const strategy&, const strategy&) = default;

private:
    std::vector<node_id> moves_;
};

struct solve_result
{
    std::vector<player> winner;  // per node
    strategy existential;        // on existential nodes of the existential region
    strategy universal;          // on universal nodes of the universal region

    [[nodiscard]] bool wins(player p, node_id v) const { return winner.at(v) == p; }
    [[nodiscard]] const strategy& of(player p) const noexcept
    {
        return p == player::existential ? existential : universal;
    }
};

// `key -> key` per mapped node, in node order.
std::string to_text(const game::parity_game& g, const strategy& s);

// The graph reachable from `from` when `who` follows `s` and the opponent
// moves freely.
std::string to_dot(const game::parity_game& g, const strategy& s, node_id from, player who = player::existential);

} // namespace hyperplay::solver
