#pragma once

#include "hyperplay/automata/dpa.hpp"
#include "hyperplay/core/problem.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hyperplay::cli {

// Exit codes shared by the subcommands.
inline constexpr int exit_ok = 0;
inline constexpr int exit_no_strategy = 1;  // also: oracle disagreement
inline constexpr int exit_error = 2;
inline constexpr int exit_refused = 3;      // simulate: a move was refused

// Reads a problem file and appends the extra prophecies given as LTL text.
hyper_problem load_problem(const std::filesystem::path& file, const std::vector<std::string>& extra_prophecies = {});

struct verify_options
{
    std::filesystem::path problem;
    std::vector<std::string> prophecies;
    std::optional<std::filesystem::path> export_strategy;
    std::optional<std::filesystem::path> export_game;
    std::size_t max_states = automata::default_state_budget;
};

// Prints STRATEGY or NO-STRATEGY; errors go to `err` as `error: <code>: <message>`.
int cmd_verify(const verify_options& options, std::ostream& out, std::ostream& err);

struct simulate_options
{
    std::filesystem::path problem;
    std::filesystem::path script;
    std::vector<std::string> prophecies;
    std::size_t max_states = automata::default_state_budget;
};

// Script lines: `move A=1 p1=true`, `jump N`; blank lines and `#` comments
// are skipped. Omitted prophecy declarations default to false.
int cmd_simulate(const simulate_options& options, std::ostream& out, std::ostream& err);
int run_script(const hyper_problem& problem, std::istream& script, std::size_t max_states, std::ostream& out,
               std::ostream& err);

struct oracle_options
{
    std::uint64_t seed = 1;
    std::size_t count = 1000;
    std::size_t max_size = 6;
    std::size_t max_stem = 4;
    std::size_t max_loop = 3;
    bool corrupt_priority = false;  // fault injection: bump one top priority
};

struct oracle_report
{
    std::size_t total = 0;
    std::size_t agree = 0;
    std::vector<std::string> failures;  // witness per disagreement
};

// Random formulas over a_A and a_B against random lassos: DPA acceptance
// versus the lasso evaluator.
oracle_report run_oracle(const oracle_options& options);
int cmd_oracle(const oracle_options& options, std::ostream& out, std::ostream& err);

} // namespace hyperplay::cli
