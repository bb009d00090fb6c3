#pragma once

#include "hyperplay/automata/dpa.hpp"
#include "hyperplay/core/problem.hpp"
#include "hyperplay/game/arena.hpp"

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hyperplay::game {

enum class node_kind : std::uint8_t { universal_choice, existential_choice };

// Member order doubles as the tie-breaking key: DPA state, state vector,
// pending universal successors, prophecy bits.
struct game_node
{
    automata::dpa_state q = 0;
    std::vector<state_id> states;   // one per system, in problem order
    std::vector<state_id> pending;  // existential_choice only
    std::uint32_t bits = 0;         // existential_choice only; bit j = prophecy j+1
    node_kind kind = node_kind::universal_choice;

    friend auto operator<=>(const game_node&, const game_node&) = default;
};

inline constexpr std::size_t default_node_budget = 1'000'000;

struct game_options
{
    std::size_t node_budget = default_node_budget;
};

// Atoms holding at a position: labels of each system's state, indexed by the
// system name, plus the prophecy variables whose bit is set.
letter_set game_letter(const hyper_problem& problem, std::span<const state_id> states, std::uint32_t bits);

class parity_game
{
public:
    [[nodiscard]] const game::arena& arena() const noexcept { return arena_; }
    [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
    [[nodiscard]] const game_node& node(node_id v) const { return nodes_.at(v); }
    [[nodiscard]] node_id initial() const noexcept { return 0; }
    [[nodiscard]] std::optional<node_id> find(const game_node& n) const;
    [[nodiscard]] const hyper_problem& problem() const noexcept { return problem_; }
    [[nodiscard]] const automata::alphabet& alphabet() const noexcept { return alphabet_; }

    // Human-readable node key, e.g. `U[A=0 B=0 | q2]`, `E[A=0 B=0 | q2 | A->1 p1=1]`.
    [[nodiscard]] std::string key(node_id v) const;

private:
    friend parity_game build_parity_game(const hyper_problem&, const automata::dpa&, const game_options&);

    explicit parity_game(hyper_problem problem, automata::alphabet ab)
        : problem_(std::move(problem)), alphabet_(std::move(ab))
    {
    }

    hyper_problem problem_;
    automata::alphabet alphabet_;
    game::arena arena_;
    std::vector<game_node> nodes_;
    std::map<game_node, node_id> index_;
};

// Materializes the nodes reachable from <initial vector, q_0>. A round out of
// <s, q> first lets the universal player fix successors for the universal
// systems together with prophecy bits, then lets the existential player fix
// the remaining successors; the resulting position s' and the bits form the
// letter the DPA reads, so q_0 is the DPA state after position 0 (whose bits
// are all false). Successor lists are sorted by node key. Throws
// hyperplay::error(budget_exceeded) past the node budget.
parity_game build_parity_game(const hyper_problem& problem, const automata::dpa& dpa, const game_options& options = {});

// DOT with owners (box = universal, diamond = existential) and priorities.
std::string to_dot(const parity_game& g);

} // namespace hyperplay::game
