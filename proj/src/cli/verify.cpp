#include "hyperplay/cli/commands.hpp"

#include "hyperplay/core/error.hpp"
#include "hyperplay/session/engine.hpp"
#include "hyperplay/solver/verify.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace hyperplay::cli {

hyper_problem load_problem(const std::filesystem::path& file, const std::vector<std::string>& extra_prophecies)
{
    std::ifstream in(file);
    if (!in)
        throw error(errc::schema, "cannot read " + file.string());
    std::ostringstream text;
    text << in.rdbuf();
    hyper_problem problem = parse_problem_text(text.str());
    if (extra_prophecies.empty())
        return problem;
    std::vector<formula> prophecies = problem.prophecies();
    for (const auto& p : extra_prophecies)
        prophecies.push_back(parse_ltl(p, problem.system_names()));
    return problem.with_prophecies(std::move(prophecies));
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream out(path);
    if (!out || !(out << content))
        throw error(errc::schema, "cannot write " + path.string());
}

} // namespace

int cmd_verify(const verify_options& options, std::ostream& out, std::ostream& err)
{
    try {
        const hyper_problem problem = load_problem(options.problem, options.prophecies);
        const auto eng = session::build_engine(problem, {.state_budget = options.max_states, .node_budget = options.max_states});
        if (options.export_game)
            write_file(*options.export_game, game::to_dot(eng->game));
        if (!eng->has_strategy()) {
            out << "NO-STRATEGY\n";
            if (options.export_strategy)
                err << "note: no strategy to export\n";
            return exit_no_strategy;
        }
        const auto check = solver::verify_strategy(eng->game.arena(), *eng->strategy, eng->game.initial());
        if (!check) {
            err << "error: certificate check failed: " << check.diagnostic << '\n';
            return exit_error;
        }
        if (options.export_strategy)
            write_file(*options.export_strategy, solver::to_text(eng->game, *eng->strategy));
        out << "STRATEGY\n";
        return exit_ok;
    } catch (const error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what();
        if (e.position())
            err << " (at " << *e.position() << ")";
        err << '\n';
        return exit_error;
    }
}

} // namespace hyperplay::cli
