#include "hyperplay/core/problem.hpp"

#include "hyperplay/core/error.hpp"

#include <algorithm>
#include <cctype>

namespace hyperplay {

std::string_view to_string(quantifier q) noexcept
{
    return q == quantifier::forall ? "forall" : "exists";
}

namespace {

bool valid_system_name(const std::string& name)
{
    return !name.empty() &&
           std::all_of(name.begin(), name.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; });
}

} // namespace

hyper_problem::hyper_problem(std::vector<quantified_system> systems, formula body, std::vector<formula> prophecies)
    : systems_(std::move(systems)), body_(std::move(body)), prophecies_(std::move(prophecies))
{
    std::set<std::string> names;
    bool seen_exists = false;
    for (const auto& qs : systems_) {
        const auto& name = qs.system.name();
        if (!valid_system_name(name))
            throw error(errc::schema, "system name '" + name + "' must be a non-empty alphanumeric identifier");
        if (!names.insert(name).second)
            throw error(errc::duplicate_system, "duplicate system name '" + name + "'");
        if (qs.quant == quantifier::exists) {
            seen_exists = true;
        } else {
            if (seen_exists)
                throw error(errc::quantifier_prefix,
                            "quantifier prefix must be forall* exists*: '" + name + "' is universal after an existential system");
            ++universal_count_;
        }
    }
    for (const auto& a : atoms_of(body_))
        if (!names.contains(a.system))
            throw error(errc::unknown_system, "formula mentions unknown system in atom '" + to_string(a) + "'");
    for (std::size_t j = 0; j < prophecies_.size(); ++j) {
        for (const auto& a : atoms_of(prophecies_[j])) {
            const auto idx = index_of(a.system);
            if (!idx)
                throw error(errc::unknown_system, "prophecy " + std::to_string(j + 1) + " mentions unknown atom '" + to_string(a) + "'");
            if (*idx >= universal_count_)
                throw error(errc::prophecy_scope, "prophecy " + std::to_string(j + 1) + " mentions existential system '" +
                                                      a.system + "'; prophecies may only refer to universal systems");
        }
    }
}

std::optional<std::size_t> hyper_problem::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < systems_.size(); ++i)
        if (systems_[i].system.name() == name)
            return i;
    return std::nullopt;
}

std::set<std::string> hyper_problem::system_names() const
{
    std::set<std::string> out;
    for (const auto& qs : systems_)
        out.insert(qs.system.name());
    return out;
}

hyper_problem hyper_problem::with_prophecies(std::vector<formula> prophecies) const
{
    return hyper_problem(systems_, body_, std::move(prophecies));
}

// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& where, const std::string& what)
{
    throw error(errc::schema, where + ": " + what);
}

const json& member(const json& obj, const char* key, const std::string& where)
{
    auto it = obj.find(key);
    if (it == obj.end())
        schema_error(where, std::string("missing \"") + key + "\"");
    return *it;
}

state_id as_state(const json& v, const std::string& where)
{
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::int64_t>() > std::int64_t{UINT32_MAX})
        schema_error(where, "state ids must be non-negative integers");
    return static_cast<state_id>(v.get<std::int64_t>());
}

std::string as_string(const json& v, const std::string& where)
{
    if (!v.is_string())
        schema_error(where, "expected a string");
    return v.get<std::string>();
}

formula parse_in_context(const std::string& text, const std::set<std::string>& systems, const std::string& where)
{
    try {
        return parse_ltl(text, systems);
    } catch (const error& e) {
        throw error(e.code(), where + ": " + e.what(), e.position());
    }
}

} // namespace

hyper_problem parse_problem(const json& doc)
{
    if (!doc.is_object())
        schema_error("document", "expected an object");
    const json& systems = member(doc, "systems", "document");
    if (!systems.is_array())
        schema_error("systems", "expected an array");

    std::vector<quantified_system> parsed;
    for (std::size_t i = 0; i < systems.size(); ++i) {
        const json& sys = systems[i];
        const std::string where = "systems[" + std::to_string(i) + "]";
        if (!sys.is_object())
            schema_error(where, "expected an object");
        std::string name = as_string(member(sys, "name", where), where + ".name");
        if (!valid_system_name(name))
            schema_error(where + ".name", "'" + name + "' must be a non-empty alphanumeric identifier");
        const std::string q = as_string(member(sys, "quantifier", where), where + ".quantifier");
        if (q != "forall" && q != "exists")
            schema_error(where + ".quantifier", "must be \"forall\" or \"exists\"");
        const state_id initial = as_state(member(sys, "initial", where), where + ".initial");
        const json& states = member(sys, "states", where);
        if (!states.is_array() || states.empty())
            schema_error(where + ".states", "expected a non-empty array");
        std::vector<transition_system::state> ts_states;
        for (std::size_t k = 0; k < states.size(); ++k) {
            const json& st = states[k];
            const std::string sw = where + ".states[" + std::to_string(k) + "]";
            if (!st.is_object())
                schema_error(sw, "expected an object");
            transition_system::state s;
            s.id = as_state(member(st, "id", sw), sw + ".id");
            if (auto it = st.find("labels"); it != st.end()) {
                if (!it->is_array())
                    schema_error(sw + ".labels", "expected an array of strings");
                for (const json& l : *it) {
                    std::string label = as_string(l, sw + ".labels");
                    if (label.empty() || label.find('_') != std::string::npos)
                        schema_error(sw + ".labels", "AP '" + label + "' must be non-empty and contain no '_'");
                    s.labels.insert(std::move(label));
                }
            }
            const json& succ = member(st, "successors", sw);
            if (!succ.is_array())
                schema_error(sw + ".successors", "expected an array");
            for (const json& t : succ)
                s.successors.push_back(as_state(t, sw + ".successors"));
            ts_states.push_back(std::move(s));
        }
        parsed.push_back({transition_system(std::move(name), initial, std::move(ts_states)),
                          q == "forall" ? quantifier::forall : quantifier::exists});
    }

    std::set<std::string> names;
    for (const auto& qs : parsed)
        if (!names.insert(qs.system.name()).second)
            throw error(errc::duplicate_system, "duplicate system name '" + qs.system.name() + "'");

    formula body = parse_in_context(as_string(member(doc, "formula", "document"), "formula"), names, "formula");
    std::vector<formula> prophecies;
    if (auto it = doc.find("prophecies"); it != doc.end()) {
        if (!it->is_array())
            schema_error("prophecies", "expected an array of strings");
        for (std::size_t j = 0; j < it->size(); ++j) {
            const std::string where = "prophecies[" + std::to_string(j) + "]";
            prophecies.push_back(parse_in_context(as_string((*it)[j], where), names, where));
        }
    }
    return hyper_problem(std::move(parsed), std::move(body), std::move(prophecies));
}

hyper_problem parse_problem_text(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw error(errc::schema, std::string("malformed JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
    }
    return parse_problem(doc);
}

json to_json(const hyper_problem& problem)
{
    json systems = json::array();
    for (const auto& qs : problem.systems()) {
        json states = json::array();
        for (const auto& s : qs.system.states())
            states.push_back({{"id", s.id}, {"labels", s.labels}, {"successors", s.successors}});
        systems.push_back({{"name", qs.system.name()},
                           {"quantifier", to_string(qs.quant)},
                           {"initial", qs.system.initial()},
                           {"states", std::move(states)}});
    }
    json prophecies = json::array();
    for (const auto& p : problem.prophecies())
        prophecies.push_back(to_string(p));
    return {{"systems", std::move(systems)}, {"formula", to_string(problem.body())}, {"prophecies", std::move(prophecies)}};
}

} // namespace hyperplay
