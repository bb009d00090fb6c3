#include "hyperplay/session/session.hpp"

#include "hyperplay/core/error.hpp"

#include <stdexcept>

namespace hyperplay::session {

std::string_view to_string(status s) noexcept
{
    return s == status::active ? "active" : "prophecy-violated";
}

const std::vector<state_id>& game_session::states() const
{
    return engine_->game.node(current().node).states;
}

automata::dpa_state game_session::dpa_state() const
{
    return engine_->game.node(current().node).q;
}

namespace {

automata::dpa_state monitor_step(const engine& eng, automata::dpa_state m, const std::vector<state_id>& states,
                                 std::uint32_t bits)
{
    const auto& mon = *eng.monitor;
    return mon.step(m, mon.alphabet().encode(game::game_letter(eng.problem, states, bits)));
}

std::uint32_t pack(const std::vector<bool>& bits)
{
    std::uint32_t out = 0;
    for (std::size_t j = 0; j < bits.size(); ++j)
        if (bits[j])
            out |= std::uint32_t{1} << j;
    return out;
}

// Validates the move and locates the pending node it leads to.
game::node_id pending_node(const game_session& s, const universal_move& move)
{
    if (s.status() != status::active)
        throw error(errc::session_inactive, "the prophecy was violated; jump to an earlier step to continue");
    const engine& eng = s.eng();
    const auto& systems = eng.problem.systems();
    const std::size_t k = eng.problem.universal_count();
    if (move.successors.size() != k)
        throw error(errc::illegal_move, "expected " + std::to_string(k) + " universal successor(s), got " +
                                            std::to_string(move.successors.size()));
    if (move.prophecies.size() != eng.problem.prophecies().size())
        throw error(errc::illegal_move, "expected " + std::to_string(eng.problem.prophecies().size()) +
                                            " prophecy declaration(s), got " + std::to_string(move.prophecies.size()));
    const auto& cur = s.states();
    for (std::size_t i = 0; i < k; ++i) {
        const auto& ts = systems[i].system;
        if (!ts.contains(move.successors[i]) || !ts.is_successor(cur[i], move.successors[i]))
            throw error(errc::illegal_move, "state " + std::to_string(move.successors[i]) + " is not a successor of " +
                                                std::to_string(cur[i]) + " in system " + ts.name());
    }
    game::game_node key{s.dpa_state(), cur, move.successors, pack(move.prophecies), game::node_kind::existential_choice};
    const auto v = eng.game.find(key);
    if (!v)
        throw std::logic_error("game is missing a legal universal move");
    return *v;
}

} // namespace

std::variant<game_session, no_strategy> start_session(const hyper_problem& problem, const engine_options& options)
{
    auto eng = build_engine(problem, options);
    if (!eng->has_strategy())
        return no_strategy{std::move(eng)};
    return start_session(std::move(eng));
}

game_session start_session(std::shared_ptr<const engine> eng)
{
    if (!eng->has_strategy())
        throw error(errc::no_winning_strategy, "no winning strategy");
    game_session s;
    snapshot first;
    first.node = eng->game.initial();
    if (eng->monitor)
        first.monitor = monitor_step(*eng, eng->monitor->initial(), eng->game.node(first.node).states, 0);
    s.engine_ = std::move(eng);
    s.history_.push_back(std::move(first));
    return s;
}

move_preview preview_move(const game_session& s, const universal_move& move)
{
    const engine& eng = s.eng();
    const game::node_id pending = pending_node(s, move);
    const game::node_id next = eng.strategy->at(pending);
    const auto& target = eng.game.node(next);
    move_preview p;
    p.response.assign(target.states.begin() + static_cast<std::ptrdiff_t>(eng.problem.universal_count()),
                      target.states.end());
    p.next_node = next;
    p.next_dpa_state = target.q;
    if (eng.monitor) {
        p.next_monitor_state = monitor_step(eng, *s.current().monitor, target.states, pack(move.prophecies));
        p.violation = eng.monitor_empty[*p.next_monitor_state];
    }
    return p;
}

game_session commit_move(const game_session& s, const universal_move& move)
{
    const move_preview p = preview_move(s, move);
    game_session out = s;
    snapshot next;
    next.node = p.next_node;
    next.monitor = p.next_monitor_state;
    next.step = s.current().step + 1;
    next.last = move_record{move, p.response};
    out.history_.push_back(std::move(next));
    out.status_ = p.violation ? status::prophecy_violated : status::active;
    if (out.status_ == status::active && !out.eng().solution.wins(game::player::existential, p.next_node))
        throw std::logic_error("strategy left the existential winning region");
    return out;
}

game_session jump_to(const game_session& s, std::size_t step)
{
    if (step >= s.history().size())
        throw error(errc::index_out_of_range, "step " + std::to_string(step) + " is outside the history (0.." +
                                                  std::to_string(s.history().size() - 1) + ")");
    game_session out = s;
    out.history_.resize(step + 1);
    const auto& m = out.current().monitor;
    out.status_ = m && out.eng().monitor_empty[*m] ? status::prophecy_violated : status::active;
    return out;
}

} // namespace hyperplay::session
