#include "hyperplay/service/service.hpp"

#include "hyperplay/automata/export.hpp"
#include "hyperplay/game/winning_condition.hpp"
#include "hyperplay/session/blob.hpp"
#include "hyperplay/session/session.hpp"

namespace hyperplay::service {

using nlohmann::json;

json ok_envelope(json payload)
{
    return {{"ok", true}, {"payload", std::move(payload)}};
}

json error_envelope(std::string_view code, const std::string& message, std::optional<std::size_t> position)
{
    json err = {{"code", code}, {"message", message}};
    if (position)
        err["position"] = *position;
    return {{"ok", false}, {"error", std::move(err)}};
}

api::api(service_options options) : options_(std::move(options)) {}

const std::vector<std::string>& api::endpoints()
{
    static const std::vector<std::string> names{"parse", "verify", "preview", "commit", "jump"};
    return names;
}

std::shared_ptr<const session::engine> api::engine_for(const hyper_problem& problem, const std::string& hash) const
{
    {
        std::lock_guard lock(mutex_);
        for (auto it = cache_.begin(); it != cache_.end(); ++it) {
            if (it->first == hash) {
                cache_.splice(cache_.begin(), cache_, it);
                return cache_.front().second;
            }
        }
    }
    auto eng = session::build_engine(problem, options_.budgets);
    std::lock_guard lock(mutex_);
    cache_.emplace_front(hash, eng);
    while (cache_.size() > options_.cache_entries)
        cache_.pop_back();
    return eng;
}

namespace {

const json& field(const json& body, const char* key)
{
    if (!body.is_object() || !body.contains(key))
        throw error(errc::schema, std::string("request is missing \"") + key + "\"");
    return body[key];
}

bool is_state_id(const json& v)
{
    return v.is_number_integer() && v.get<std::int64_t>() >= 0 && v.get<std::int64_t>() <= std::int64_t{UINT32_MAX};
}

session::universal_move parse_move(const json& m, const hyper_problem& problem)
{
    if (!m.is_object())
        throw error(errc::schema, "move must be an object");
    session::universal_move move;
    const json& succ = field(m, "successors");
    const std::size_t k = problem.universal_count();
    if (succ.is_object()) {
        for (std::size_t i = 0; i < k; ++i) {
            const auto& name = problem.systems()[i].system.name();
            if (!succ.contains(name) || !is_state_id(succ[name]))
                throw error(errc::illegal_move, "move has no successor for universal system " + name);
            move.successors.push_back(succ[name].get<state_id>());
        }
        if (succ.size() != k)
            throw error(errc::illegal_move, "move names systems that are not universal");
    } else if (succ.is_array()) {
        for (const json& s : succ) {
            if (!is_state_id(s))
                throw error(errc::schema, "successors must be state ids");
            move.successors.push_back(s.get<state_id>());
        }
    } else {
        throw error(errc::schema, "successors must be an object or an array");
    }
    if (auto it = m.find("prophecies"); it != m.end()) {
        if (!it->is_array())
            throw error(errc::schema, "prophecies must be an array of booleans");
        for (const json& b : *it) {
            if (!b.is_boolean())
                throw error(errc::schema, "prophecies must be an array of booleans");
            move.prophecies.push_back(b.get<bool>());
        }
    }
    return move;
}

json named_states(const hyper_problem& problem, std::size_t first, const std::vector<state_id>& states)
{
    json out = json::object();
    for (std::size_t i = 0; i < states.size(); ++i)
        out[problem.systems()[first + i].system.name()] = states[i];
    return out;
}

json session_payload(const session::game_session& s)
{
    return {{"session", session::to_blob(s)},
            {"snapshot", session::to_json(s, s.current())},
            {"status", std::string(session::to_string(s.status()))}};
}

json automaton_summary(const automata::dpa& d)
{
    json vars = json::array();
    for (const auto& v : d.alphabet().vars())
        vars.push_back(to_string(v));
    return {{"states", d.num_states()},
            {"initial", d.initial()},
            {"priorities", d.priorities()},
            {"max_priority", d.max_priority()},
            {"alphabet", std::move(vars)},
            {"hoa", automata::to_hoa(d)},
            {"dot", automata::to_dot(d)}};
}

} // namespace

json api::handle(std::string_view endpoint, const json& body) const
{
    try {
        if (endpoint == "parse") {
            const hyper_problem problem = parse_problem(body);
            const formula eff = game::effective_formula(problem);
            const auto dpa = automata::ltl_to_dpa(eff, game::game_alphabet(problem),
                                                  {.state_budget = options_.budgets.state_budget});
            json payload = {{"problem", to_json(problem)},
                            {"effective_formula", to_string(eff)},
                            {"automaton", automaton_summary(dpa)}};
            return ok_envelope(std::move(payload));
        }
        if (endpoint == "verify") {
            const hyper_problem problem = parse_problem(body);
            auto eng = engine_for(problem, session::problem_hash(problem));
            if (!eng->has_strategy())
                return ok_envelope({{"result", "no-strategy"}});
            json payload = session_payload(session::start_session(std::move(eng)));
            payload["result"] = "strategy";
            return ok_envelope(std::move(payload));
        }
        if (endpoint == "preview" || endpoint == "commit" || endpoint == "jump") {
            const auto provider = [this](const hyper_problem& p, const std::string& hash) { return engine_for(p, hash); };
            const auto s = session::from_blob(field(body, "session"), provider);
            const hyper_problem& problem = s.eng().problem;
            if (endpoint == "jump") {
                const json& step = field(body, "step");
                if (!step.is_number_integer())
                    throw error(errc::schema, "step must be an integer");
                if (step.get<std::int64_t>() < 0)
                    throw error(errc::index_out_of_range, "step must be non-negative");
                return ok_envelope(session_payload(session::jump_to(s, step.get<std::size_t>())));
            }
            const auto move = parse_move(field(body, "move"), problem);
            if (endpoint == "commit")
                return ok_envelope(session_payload(session::commit_move(s, move)));
            const auto p = session::preview_move(s, move);
            json payload = {{"response", named_states(problem, problem.universal_count(), p.response)},
                            {"existential_successors", p.response},
                            {"next_dpa_state", p.next_dpa_state},
                            {"violation", p.violation}};
            payload["next_monitor_state"] = p.next_monitor_state ? json(*p.next_monitor_state) : json(nullptr);
            return ok_envelope(std::move(payload));
        }
        return error_envelope("unknown-endpoint", "unknown endpoint '" + std::string(endpoint) + "'");
    } catch (const error& e) {
        return error_envelope(to_string(e.code()), e.what(), e.position());
    } catch (const json::exception& e) {
        return error_envelope(to_string(errc::schema), e.what());
    } catch (const std::exception& e) {
        return error_envelope("internal", e.what());
    }
}

json api::handle_text(std::string_view endpoint, std::string_view body) const
{
    json parsed;
    try {
        parsed = json::parse(body);
    } catch (const json::parse_error& e) {
        return error_envelope(to_string(errc::schema), std::string("malformed JSON: ") + e.what(), e.byte);
    }
    return handle(endpoint, parsed);
}

} // namespace hyperplay::service
