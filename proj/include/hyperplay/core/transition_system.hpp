#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace hyperplay {

using state_id = std::uint32_t;

// Finite Kripke structure with a total successor relation.
class transition_system
{
public:
    struct state
    {
        state_id id = 0;
        std::set<std::string> labels;
        std::vector<state_id> successors;
    };

    // Validates: unique ids, initial and successors exist, no empty successor
    // set. Throws hyperplay::error.
    transition_system(std::string name, state_id initial, std::vector<state> states);

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] state_id initial() const noexcept { return initial_; }
    // Sorted by id.
    [[nodiscard]] const std::vector<state>& states() const noexcept { return states_; }
    [[nodiscard]] bool contains(state_id id) const noexcept;
    // Sorted, duplicate-free.
    [[nodiscard]] std::span<const state_id> successors(state_id id) const;
    [[nodiscard]] const std::set<std::string>& labels(state_id id) const;
    [[nodiscard]] bool is_successor(state_id from, state_id to) const;
    [[nodiscard]] std::set<std::string> ap_universe() const;

private:
    [[nodiscard]] const state& at(state_id id) const;

    std::string name_;
    state_id initial_ = 0;
    std::vector<state> states_;
};

} // namespace hyperplay
