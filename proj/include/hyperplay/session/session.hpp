#pragma once

#include "hyperplay/session/engine.hpp"

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace hyperplay::session {

enum class status : std::uint8_t { active, prophecy_violated };

std::string_view to_string(status s) noexcept;

// What the universal player fixes in one round.
struct universal_move
{
    std::vector<state_id> successors;  // one per universal system
    std::vector<bool> prophecies;      // one declaration per prophecy

    friend bool operator==(const universal_move&, const universal_move&) = default;
};

struct move_record
{
    universal_move move;
    std::vector<state_id> response;  // one per existential system

    friend bool operator==(const move_record&, const move_record&) = default;
};

struct snapshot
{
    game::node_id node = 0;  // a universal_choice node
    std::optional<automata::dpa_state> monitor;
    std::size_t step = 0;
    std::optional<move_record> last;  // absent on the initial snapshot

    friend bool operator==(const snapshot&, const snapshot&) = default;
};

struct move_preview
{
    std::vector<state_id> response;  // existential successors
    game::node_id next_node = 0;
    automata::dpa_state next_dpa_state = 0;
    std::optional<automata::dpa_state> next_monitor_state;
    bool violation = false;
};

// A play against the synthesized strategy. Sessions are values: every
// operation returns a new session and leaves its argument untouched.
class game_session
{
public:
    [[nodiscard]] const engine& eng() const noexcept { return *engine_; }
    [[nodiscard]] const std::shared_ptr<const engine>& engine_ptr() const noexcept { return engine_; }
    [[nodiscard]] const std::vector<snapshot>& history() const noexcept { return history_; }
    [[nodiscard]] const snapshot& current() const noexcept { return history_.back(); }
    [[nodiscard]] session::status status() const noexcept { return status_; }
    [[nodiscard]] const std::vector<state_id>& states() const;  // current state vector
    [[nodiscard]] automata::dpa_state dpa_state() const;        // current DPA state

    friend bool operator==(const game_session& a, const game_session& b)
    {
        return a.engine_ == b.engine_ && a.history_ == b.history_ && a.status_ == b.status_;
    }

private:
    friend game_session start_session(std::shared_ptr<const engine> eng);
    friend game_session commit_move(const game_session& s, const universal_move& move);
    friend game_session jump_to(const game_session& s, std::size_t step);

    std::shared_ptr<const engine> engine_;
    std::vector<snapshot> history_;
    session::status status_ = session::status::active;
};

struct no_strategy
{
    std::shared_ptr<const engine> details;
};

// Runs the whole pipeline. Budget overruns throw hyperplay::error.
std::variant<game_session, no_strategy> start_session(const hyper_problem& problem, const engine_options& options = {});

// Throws hyperplay::error(no_winning_strategy) when the engine has none.
game_session start_session(std::shared_ptr<const engine> eng);

// The strategy's answer to `move` from the current snapshot; no state change.
// Throws hyperplay::error: session_inactive, illegal_move.
move_preview preview_move(const game_session& s, const universal_move& move);

// Plays `move`. A monitor state with empty language turns the session into
// prophecy_violated, which refuses further moves until jump_to.
game_session commit_move(const game_session& s, const universal_move& move);

// Truncates the history after `step`; the status is recomputed from that
// snapshot. Throws hyperplay::error(index_out_of_range).
game_session jump_to(const game_session& s, std::size_t step);

} // namespace hyperplay::session
