#include "hyperplay/core/transition_system.hpp"

#include "hyperplay/core/error.hpp"

#include <algorithm>

namespace hyperplay {

transition_system::transition_system(std::string name, state_id initial, std::vector<state> states)
    : name_(std::move(name)), initial_(initial), states_(std::move(states))
{
    std::sort(states_.begin(), states_.end(), [](const state& a, const state& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < states_.size(); ++i)
        if (states_[i].id == states_[i - 1].id)
            throw error(errc::schema, "system '" + name_ + "': duplicate state id " + std::to_string(states_[i].id));
    if (!contains(initial_))
        throw error(errc::unknown_state, "system '" + name_ + "': initial state " + std::to_string(initial_) + " does not exist");
    for (auto& s : states_) {
        if (s.successors.empty())
            throw error(errc::empty_successors, "system '" + name_ + "': state " + std::to_string(s.id) + " has no successors");
        std::sort(s.successors.begin(), s.successors.end());
        s.successors.erase(std::unique(s.successors.begin(), s.successors.end()), s.successors.end());
        for (state_id t : s.successors)
            if (!contains(t))
                throw error(errc::unknown_state, "system '" + name_ + "': state " + std::to_string(s.id) +
                                                     " has unknown successor " + std::to_string(t));
    }
}

bool transition_system::contains(state_id id) const noexcept
{
    auto it = std::lower_bound(states_.begin(), states_.end(), id, [](const state& s, state_id v) { return s.id < v; });
    return it != states_.end() && it->id == id;
}

const transition_system::state& transition_system::at(state_id id) const
{
    auto it = std::lower_bound(states_.begin(), states_.end(), id, [](const state& s, state_id v) { return s.id < v; });
    if (it == states_.end() || it->id != id)
        throw error(errc::unknown_state, "system '" + name_ + "' has no state " + std::to_string(id));
    return *it;
}

std::span<const state_id> transition_system::successors(state_id id) const { return at(id).successors; }

const std::set<std::string>& transition_system::labels(state_id id) const { return at(id).labels; }

bool transition_system::is_successor(state_id from, state_id to) const
{
    const auto succ = successors(from);
    return std::binary_search(succ.begin(), succ.end(), to);
}

std::set<std::string> transition_system::ap_universe() const
{
    std::set<std::string> out;
    for (const auto& s : states_)
        out.insert(s.labels.begin(), s.labels.end());
    return out;
}

} // namespace hyperplay
