#include "hyperplay/cli/commands.hpp"

#include "hyperplay/core/error.hpp"
#include "hyperplay/session/session.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace hyperplay::cli {

namespace {

using session::game_session;

void print_snapshot(const game_session& s, std::ostream& out)
{
    const auto& problem = s.eng().problem;
    const auto& snap = s.current();
    out << "step " << snap.step << ":";
    const auto& states = s.states();
    for (std::size_t i = 0; i < states.size(); ++i)
        out << ' ' << problem.systems()[i].system.name() << '=' << states[i];
    out << " | q" << s.dpa_state();
    if (snap.last)
        for (std::size_t j = 0; j < snap.last->move.prophecies.size(); ++j)
            out << " | p" << j + 1 << '=' << (snap.last->move.prophecies[j] ? "true" : "false");
    out << '\n';
}

std::optional<std::size_t> parse_number(std::string_view text)
{
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size())
        return std::nullopt;
    return value;
}

session::universal_move parse_move(std::istringstream& tokens, const hyper_problem& problem)
{
    const std::size_t k = problem.universal_count();
    std::vector<std::optional<state_id>> succ(k);
    std::vector<bool> bits(problem.prophecies().size(), false);
    std::string tok;
    while (tokens >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw error(errc::illegal_move, "expected NAME=VALUE, got '" + tok + "'");
        const std::string name = tok.substr(0, eq);
        const std::string value = tok.substr(eq + 1);
        if (auto idx = problem.index_of(name); idx && *idx < k) {
            const auto n = parse_number(value);
            if (!n)
                throw error(errc::illegal_move, "bad state '" + value + "' for system " + name);
            succ[*idx] = static_cast<state_id>(*n);
            continue;
        }
        if (name.size() > 1 && name[0] == 'p') {
            const auto j = parse_number(std::string_view(name).substr(1));
            if (j && *j >= 1 && *j <= bits.size() && (value == "true" || value == "false")) {
                bits[*j - 1] = value == "true";
                continue;
            }
        }
        throw error(errc::illegal_move, "'" + tok + "' names neither a universal system nor a prophecy");
    }
    session::universal_move move;
    move.prophecies = std::move(bits);
    for (std::size_t i = 0; i < k; ++i) {
        if (!succ[i])
            throw error(errc::illegal_move, "move does not fix universal system " + problem.systems()[i].system.name());
        move.successors.push_back(*succ[i]);
    }
    return move;
}

} // namespace

int run_script(const hyper_problem& problem, std::istream& script, std::size_t max_states, std::ostream& out,
               std::ostream& err)
{
    auto started = session::start_session(problem, {.state_budget = max_states, .node_budget = max_states});
    if (std::holds_alternative<session::no_strategy>(started)) {
        out << "NO-STRATEGY\n";
        return exit_no_strategy;
    }
    game_session s = std::get<game_session>(std::move(started));
    print_snapshot(s, out);

    bool refused = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(script, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream tokens(line);
        std::string command;
        if (!(tokens >> command))
            continue;
        out << "> " << line.substr(line.find_first_not_of(" \t")) << '\n';
        try {
            if (command == "move") {
                s = session::commit_move(s, parse_move(tokens, problem));
                print_snapshot(s, out);
                if (s.status() == session::status::prophecy_violated)
                    out << "PROPHECY-VIOLATED\n";
            } else if (command == "jump") {
                std::string arg;
                std::optional<std::size_t> step;
                if (tokens >> arg)
                    step = parse_number(arg);
                if (!step || (tokens >> arg))
                    throw error(errc::illegal_move, "usage: jump N");
                s = session::jump_to(s, *step);
                print_snapshot(s, out);
                if (s.status() == session::status::prophecy_violated)
                    out << "PROPHECY-VIOLATED\n";
            } else {
                throw error(errc::illegal_move, "unknown command '" + command + "'");
            }
        } catch (const error& e) {
            if (e.code() == errc::session_inactive) {
                out << "REFUSED: " << e.what() << '\n';
                refused = true;
                continue;
            }
            out << "ILLEGAL: " << e.what() << '\n';
            err << "error: line " << line_no << ": " << to_string(e.code()) << ": " << e.what() << '\n';
            return exit_error;
        }
    }
    return refused ? exit_refused : exit_ok;
}

int cmd_simulate(const simulate_options& options, std::ostream& out, std::ostream& err)
{
    try {
        const hyper_problem problem = load_problem(options.problem, options.prophecies);
        std::ifstream script(options.script);
        if (!script)
            throw error(errc::schema, "cannot read " + options.script.string());
        return run_script(problem, script, options.max_states, out, err);
    } catch (const error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return exit_error;
    }
}

} // namespace hyperplay::cli
