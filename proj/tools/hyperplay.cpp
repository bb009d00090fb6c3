#include "hyperplay/cli/commands.hpp"
#include "hyperplay/service/http.hpp"

#include <CLI11.hpp>

#include <csignal>
#include <iostream>

namespace {

hyperplay::service::http_server* running = nullptr;

void on_signal(int)
{
    if (running)
        running->stop();
}

bool split_listen(const std::string& listen, std::string& host, int& port)
{
    const auto colon = listen.rfind(':');
    if (colon == std::string::npos)
        return false;
    host = listen.substr(0, colon);
    try {
        port = std::stoi(listen.substr(colon + 1));
    } catch (const std::exception&) {
        return false;
    }
    return port >= 0 && port < 65536;
}

} // namespace

int main(int argc, char** argv)
{
    namespace cli = hyperplay::cli;
    CLI::App app{"hyperplay: forall*exists* HyperLTL verification by parity games"};
    app.require_subcommand(1);

    cli::verify_options verify;
    auto* v = app.add_subcommand("verify", "Synthesize and check a strategy for the existential systems");
    v->add_option("problem", verify.problem, "Problem file (JSON)")->required()->check(CLI::ExistingFile);
    v->add_option("--prophecy", verify.prophecies, "Extra prophecy formula (repeatable)");
    v->add_option("--export-strategy", verify.export_strategy, "Write the strategy as `node -> node` lines");
    v->add_option("--export-game", verify.export_game, "Write the game graph as DOT");
    v->add_option("--max-states", verify.max_states, "Budget for automaton states and game nodes");

    cli::simulate_options simulate;
    auto* s = app.add_subcommand("simulate", "Replay a move script against the strategy");
    s->add_option("problem", simulate.problem, "Problem file (JSON)")->required()->check(CLI::ExistingFile);
    s->add_option("script", simulate.script, "Script with `move` and `jump` lines")->required()->check(CLI::ExistingFile);
    s->add_option("--prophecy", simulate.prophecies, "Extra prophecy formula (repeatable)");
    s->add_option("--max-states", simulate.max_states, "Budget for automaton states and game nodes");

    cli::oracle_options oracle;
    auto* o = app.add_subcommand("oracle", "Cross-check parity automata against the lasso evaluator");
    o->add_option("--seed", oracle.seed, "Random seed");
    o->add_option("--count", oracle.count, "Number of (formula, lasso) pairs");
    o->add_option("--max-size", oracle.max_size, "Largest formula size");
    o->add_option("--max-stem", oracle.max_stem, "Longest lasso stem");
    o->add_option("--max-loop", oracle.max_loop, "Longest lasso loop")->check(CLI::PositiveNumber);
    o->add_flag("--corrupt-priority", oracle.corrupt_priority, "Fault injection: bump one top priority per automaton");

    std::string listen = "127.0.0.1:8080";
    std::optional<std::string> static_dir;
    hyperplay::service::service_options service;
    auto* sv = app.add_subcommand("serve", "Serve the JSON API over HTTP");
    sv->add_option("--listen", listen, "host:port")->envname("HYPERPLAY_LISTEN")->capture_default_str();
    sv->add_option("--static", static_dir, "Directory with the UI bundle")->envname("HYPERPLAY_STATIC");
    sv->add_option("--max-states", service.budgets.state_budget, "Budget for automaton states and game nodes")
        ->envname("HYPERPLAY_MAX_STATES");

    CLI11_PARSE(app, argc, argv);

    if (*v)
        return cli::cmd_verify(verify, std::cout, std::cerr);
    if (*s)
        return cli::cmd_simulate(simulate, std::cout, std::cerr);
    if (*o)
        return cli::cmd_oracle(oracle, std::cout, std::cerr);

    hyperplay::service::http_options http;
    if (!split_listen(listen, http.host, http.port)) {
        std::cerr << "error: --listen expects host:port\n";
        return cli::exit_error;
    }
    if (static_dir)
        http.static_dir = *static_dir;
    service.budgets.node_budget = service.budgets.state_budget;
    try {
        const hyperplay::service::api handler(service);
        hyperplay::service::http_server server(handler, http);
        const int port = server.bind();
        std::cerr << "listening on " << http.host << ':' << port << '\n';
        running = &server;
        std::signal(SIGINT, on_signal);
        std::signal(SIGTERM, on_signal);
        server.serve();
        running = nullptr;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::exit_error;
    }
    return cli::exit_ok;
}
