// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Everything runs through the CLI entry points, the session
// API and the JSON service; no UI is involved.

#include "hyperplay/cli/commands.hpp"
#include "hyperplay/cli/random.hpp"
#include "hyperplay/core/lasso.hpp"
#include "hyperplay/service/service.hpp"
#include "hyperplay/session/session.hpp"
#include "hyperplay/solver/verify.hpp"
#include "hyperplay/solver/zielonka.hpp"
#include "support/brute_force.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

#include <chrono>
#include <iostream>
#include <map>
#include <sstream>

using namespace hyperplay;
using nlohmann::json;

namespace {

// Pinned thresholds.
constexpr std::size_t oracle_pairs = 1000;          // criterion 3: all must agree
constexpr std::size_t solver_games = 600;           // criterion 4: at least 500
constexpr std::size_t solver_min_games = 500;
constexpr std::size_t solver_max_nodes = 8;
constexpr game::priority solver_max_priority = 3;
constexpr std::size_t play_problems = 100;          // criterion 6
constexpr std::size_t plays_per_problem = 3;
constexpr std::size_t play_attempts = 20000;        // random problems drawn at most

struct outcome
{
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct cmd_run
{
    int code;
    std::string out;
    std::string err;
};

cmd_run verify_fixture(const std::string& fixture, std::vector<std::string> prophecies = {})
{
    cli::verify_options o;
    o.problem = testing::fixture_path(fixture);
    o.prophecies = std::move(prophecies);
    std::ostringstream out, err;
    const int code = cli::cmd_verify(o, out, err);
    return {code, out.str(), err.str()};
}

cmd_run simulate_fixture(const std::string& fixture, const std::string& script)
{
    std::istringstream in(script);
    std::ostringstream out, err;
    const int code = cli::run_script(cli::load_problem(testing::fixture_path(fixture)), in,
                                     automata::default_state_budget, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle)
{
    return hay.find(needle) != std::string::npos;
}

// Strategies checked in criterion 5, collected while the other criteria run.
struct certificate_log
{
    std::size_t checked = 0;
    std::vector<std::string> rejected;

    void check(const session::engine& e, const std::string& name)
    {
        ++checked;
        const auto v = solver::verify_strategy(e.game.arena(), *e.strategy, e.game.initial());
        if (!v)
            rejected.push_back(name + ": " + v.diagnostic);
    }
};

std::shared_ptr<const session::engine> engine_of(const std::string& fixture)
{
    return session::build_engine(testing::load_fixture(fixture));
}

outcome criterion1(certificate_log& certs)
{
    outcome r;
    const auto v = verify_fixture("example1.json");
    r.require(v.code == cli::exit_ok && v.out == "STRATEGY\n", "verify did not report STRATEGY: " + v.out + v.err);

    const auto s = simulate_fixture("example1.json", "move A=1\n");
    r.require(s.code == cli::exit_ok, "simulate exit " + std::to_string(s.code) + ": " + s.err);
    r.require(contains(s.out, "step 1: A=1 B=2 "), "expected response B=2, transcript:\n" + s.out);

    const auto problem = testing::load_fixture("example1.json");
    r.require(!problem.systems()[1].system.labels(2).contains("h"), "B's state 2 carries h");

    const auto eng = engine_of("example1.json");
    r.require(eng->has_strategy(), "engine found no strategy");
    if (!r.ok)
        return r;
    certs.check(*eng, "example 1");
    const auto next = session::commit_move(session::start_session(eng), {{1}, {}});
    r.require(next.states() == std::vector<state_id>{1, 2}, "session response differs from the transcript");
    r.require(eng->solution.wins(game::player::existential, next.current().node), "play left the winning region");
    if (r.ok)
        r.detail = "STRATEGY; move A=1 answered by B=2 (no h), still in the winning region";
    return r;
}

outcome criterion2(certificate_log& certs)
{
    outcome r;
    const auto a = verify_fixture("example2.json");
    r.require(a.code == cli::exit_no_strategy && a.out == "NO-STRATEGY\n", "(a) expected NO-STRATEGY: " + a.out + a.err);

    const auto b = verify_fixture("example2.json", {"X a_A"});
    r.require(b.code == cli::exit_ok && b.out == "STRATEGY\n", "(b) expected STRATEGY: " + b.out + b.err);
    const auto bs = simulate_fixture("example2_prophecy.json", "move A=1 p1=true\n");
    r.require(contains(bs.out, "step 1: A=1 B=1 "), "(b) expected B=1 after bit=true:\n" + bs.out);
    const auto problem = testing::load_fixture("example2_prophecy.json");
    r.require(problem.systems()[1].system.labels(1).contains("a"), "(b) B's state 1 is not labelled a");

    const auto c = simulate_fixture("example2_prophecy.json",
                                    "move A=1 p1=true\nmove A=0 p1=false\nmove A=1 p1=true\njump 1\nmove A=1 p1=false\n");
    r.require(!problem.systems()[0].system.labels(0).contains("a"), "(c) A's state 0 is labelled a");
    r.require(contains(c.out, "step 2: A=0 B=0 | q") && contains(c.out, "PROPHECY-VIOLATED\n> move A=1 p1=true\nREFUSED"),
              "(c) expected violation then refusal:\n" + c.out);
    r.require(contains(c.out, "> jump 1\nstep 1: A=1 B=1 ") && contains(c.out, "> move A=1 p1=false\nstep 2: A=1 "),
              "(c) expected play to resume after jump:\n" + c.out);
    r.require(c.code == cli::exit_refused, "(c) expected the refused exit code");

    const auto eng = engine_of("example2_prophecy.json");
    if (eng->has_strategy())
        certs.check(*eng, "example 2 with prophecy");
    if (r.ok)
        r.detail = "(a) NO-STRATEGY, (b) STRATEGY with B=1 on bit=true, (c) violation refused until jump";
    return r;
}

outcome criterion3()
{
    outcome r;
    cli::oracle_options o;  // formulas of size <= 6 over a_A, a_B; stem <= 4, loop <= 3
    o.count = oracle_pairs;
    const auto report = cli::run_oracle(o);
    r.require(report.total == oracle_pairs, "ran " + std::to_string(report.total) + " pairs");
    r.require(report.agree == report.total,
              std::to_string(report.agree) + "/" + std::to_string(report.total) + " agree; first: " +
                  (report.failures.empty() ? "" : report.failures.front()));
    if (r.ok)
        r.detail = std::to_string(report.agree) + "/" + std::to_string(report.total) + " agree";
    return r;
}

outcome criterion4()
{
    outcome r;
    cli::rng gen(4);
    std::size_t nodes = 0;
    for (std::size_t i = 0; i < solver_games && r.ok; ++i) {
        const auto a = testing::random_arena(gen, solver_max_nodes, 3, solver_max_priority);
        const auto z = solver::solve_zielonka(a).winner;
        const auto b = testing::brute_force_winners(a);
        nodes += a.size();
        r.require(z == b, "game " + std::to_string(i) + " disagrees with brute force");
    }
    static_assert(solver_games >= solver_min_games);
    if (r.ok)
        r.detail = std::to_string(solver_games) + " games, " + std::to_string(nodes) + " nodes, 100% agreement";
    return r;
}

outcome criterion5(const certificate_log& certs)
{
    outcome r;
    r.require(certs.rejected.empty(), certs.rejected.empty() ? "" : "rejected " + certs.rejected.front());
    r.require(certs.checked >= 2 + play_problems, "only " + std::to_string(certs.checked) + " strategies checked");

    // Fault injection: answer A->1 with B->1 instead of the strategy's move.
    const auto eng = engine_of("example1.json");
    const auto& g = eng->game;
    const auto pending = g.find({g.node(g.initial()).q, {0, 0}, {1}, 0, game::node_kind::existential_choice});
    r.require(pending.has_value(), "no pending node for A->1");
    if (!r.ok)
        return r;
    std::optional<game::node_id> bad;
    for (game::node_id w : g.arena().succ[*pending])
        if (g.node(w).states == std::vector<state_id>{1, 1})
            bad = w;
    r.require(bad && eng->strategy->at(*pending) != *bad, "no distinct move to flip to");
    if (!r.ok)
        return r;
    auto flipped = *eng->strategy;
    flipped.set(*pending, *bad);
    r.require(!solver::verify_strategy(g.arena(), flipped, g.initial()), "flipped strategy was accepted");
    if (r.ok)
        r.detail = std::to_string(certs.checked) + " strategies accepted; flipped example 1 move rejected";
    return r;
}

// Trace letter of one position: labels of every system plus the prophecy bits.
letter_set trace_letter(const hyper_problem& p, const std::vector<state_id>& states, const std::vector<bool>& bits)
{
    letter_set out;
    for (std::size_t i = 0; i < states.size(); ++i)
        for (const auto& ap : p.systems()[i].system.labels(states[i]))
            out.insert(atom{ap, p.systems()[i].system.name()});
    for (std::size_t j = 0; j < bits.size(); ++j)
        if (bits[j])
            out.insert(prophecy_variable(j + 1));
    return out;
}

// Position key: universal node, monitor state and the position's bits. The
// universal player's choice is a fixed random function of the key, so the
// play closes into a lasso the first time a key repeats.
using position_key = std::tuple<game::node_id, std::optional<automata::dpa_state>, std::vector<bool>>;

std::vector<bool> position_bits(const session::game_session& s)
{
    if (const auto& last = s.current().last)
        return last->move.prophecies;
    return std::vector<bool>(s.eng().problem.prophecies().size(), false);
}

// Every universal move available now, in enumeration order.
std::vector<session::universal_move> all_moves(const session::game_session& s)
{
    const auto& p = s.eng().problem;
    std::vector<session::universal_move> out{{}};
    for (std::size_t u = 0; u < p.universal_count(); ++u) {
        std::vector<session::universal_move> next;
        for (const auto& m : out)
            for (state_id t : p.systems()[u].system.successors(s.states()[u])) {
                auto e = m;
                e.successors.push_back(t);
                next.push_back(std::move(e));
            }
        out = std::move(next);
    }
    for (std::size_t j = 0; j < p.prophecies().size(); ++j) {
        std::vector<session::universal_move> next;
        for (const auto& m : out)
            for (bool b : {false, true}) {
                auto e = m;
                e.prophecies.push_back(b);
                next.push_back(std::move(e));
            }
        out = std::move(next);
    }
    return out;
}

// One random play to lasso closure. Bits are drawn among the moves that keep
// the assumption monitor satisfiable. Returns nullopt when every move would
// violate it (the play is then abandoned).
std::optional<lasso_word> random_closed_play(const std::shared_ptr<const session::engine>& eng, cli::rng& gen)
{
    auto s = session::start_session(eng);
    std::map<position_key, std::size_t> seen;
    std::vector<letter_set> trace;
    while (true) {
        position_key key{s.current().node, s.current().monitor, position_bits(s)};
        if (auto it = seen.find(key); it != seen.end()) {
            lasso_word w;
            w.stem.assign(trace.begin(), trace.begin() + static_cast<std::ptrdiff_t>(it->second));
            w.loop.assign(trace.begin() + static_cast<std::ptrdiff_t>(it->second), trace.end());
            return w;
        }
        seen.emplace(key, trace.size());
        trace.push_back(trace_letter(eng->problem, s.states(), std::get<2>(key)));

        std::vector<session::universal_move> safe;
        for (auto& m : all_moves(s))
            if (!session::preview_move(s, m).violation)
                safe.push_back(std::move(m));
        if (safe.empty())
            return std::nullopt;
        s = session::commit_move(s, safe[std::uniform_int_distribution<std::size_t>(0, safe.size() - 1)(gen)]);
    }
}

outcome criterion6(certificate_log& certs)
{
    outcome r;
    cli::rng gen(6);
    cli::problem_bounds bounds;  // <= 4 states, 1..2 universal + 1 existential, body size <= 5
    std::size_t solvable = 0;
    std::size_t drawn = 0;
    std::size_t plays = 0;
    std::size_t abandoned = 0;
    std::size_t longest = 0;
    while (solvable < play_problems && drawn < play_attempts && r.ok) {
        ++drawn;
        const auto problem = cli::random_problem(gen, bounds);
        const auto eng = session::build_engine(problem);
        if (!eng->has_strategy())
            continue;
        ++solvable;
        certs.check(*eng, "random problem " + std::to_string(drawn));
        for (std::size_t k = 0; k < plays_per_problem && r.ok; ++k) {
            const auto word = random_closed_play(eng, gen);
            if (!word) {
                ++abandoned;
                continue;
            }
            ++plays;
            longest = std::max(longest, word->length());
            r.require(eval_ltl_on_lasso(eng->effective, *word),
                      "psi' false on play of problem " + std::to_string(drawn) + ": " + to_string(eng->effective) +
                          " on " + to_string(*word) + "\nproblem: " + to_json(problem).dump());
        }
    }
    r.require(solvable == play_problems, "only " + std::to_string(solvable) + " solvable problems in " +
                                             std::to_string(drawn) + " draws");
    r.require(plays >= play_problems, "only " + std::to_string(plays) + " closed plays");
    if (r.ok)
        r.detail = std::to_string(solvable) + " solvable problems (" + std::to_string(drawn) + " drawn), " +
                   std::to_string(plays) + " closed plays, " + std::to_string(abandoned) + " abandoned, longest lasso " +
                   std::to_string(longest);
    return r;
}

outcome criterion7()
{
    outcome r;
    std::vector<std::pair<std::string, json>> log;
    std::vector<std::string> recorded;
    {
        const service::api api;
        auto call = [&](const std::string& endpoint, json body) {
            log.emplace_back(endpoint, body);
            const json res = api.handle(endpoint, body);
            recorded.push_back(res.dump());
            return res;
        };
        auto move = [](int a, std::optional<bool> bit) {
            json m = {{"successors", {{"A", a}}}};
            if (bit)
                m["prophecies"] = {*bit};
            return m;
        };
        const json one = call("verify", json::parse(testing::read_fixture("example1.json")));
        const json blob1 = one["payload"]["session"];
        call("parse", json::parse(testing::read_fixture("example1.json")));
        call("preview", {{"session", blob1}, {"move", move(1, std::nullopt)}});
        call("commit", {{"session", blob1}, {"move", move(1, std::nullopt)}});

        call("verify", json::parse(testing::read_fixture("example2.json")));
        const json two = call("verify", json::parse(testing::read_fixture("example2_prophecy.json")));
        const json s1 = call("commit", {{"session", two["payload"]["session"]}, {"move", move(1, true)}});
        const json s2 = call("commit", {{"session", s1["payload"]["session"]}, {"move", move(0, false)}});
        call("commit", {{"session", s2["payload"]["session"]}, {"move", move(1, true)}});
        call("jump", {{"session", s2["payload"]["session"]}, {"step", 1}});
        r.require(s2["payload"]["status"] == "prophecy-violated", "recorded log does not reach the violation");
    }
    const service::api fresh;
    for (std::size_t i = 0; i < log.size() && r.ok; ++i)
        r.require(fresh.handle(log[i].first, log[i].second).dump() == recorded[i],
                  "response " + std::to_string(i) + " (" + log[i].first + ") differs on replay");
    if (r.ok)
        r.detail = std::to_string(log.size()) + " recorded requests replayed with identical bodies";
    return r;
}

struct timed
{
    outcome result;
    double seconds = 0;
};

template <class F>
timed run(F&& criterion)
{
    const auto start = std::chrono::steady_clock::now();
    timed t;
    try {
        t.result = criterion();
    } catch (const std::exception& e) {
        t.result = {false, std::string("exception: ") + e.what()};
    }
    t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return t;
}

} // namespace

int main()
{
    certificate_log certs;
    std::map<int, std::pair<const char*, timed>> results;
    results[1] = {"example 1 regression", run([&] { return criterion1(certs); })};
    results[2] = {"example 2 triple", run([&] { return criterion2(certs); })};
    results[3] = {"automata oracle", run([] { return criterion3(); })};
    results[4] = {"solver oracle", run([] { return criterion4(); })};
    // Criterion 6 runs before 5 so that its strategies join the certificate check.
    results[6] = {"bounded play soundness", run([&] { return criterion6(certs); })};
    results[5] = {"certificate soundness", run([&] { return criterion5(certs); })};
    results[7] = {"statelessness", run([] { return criterion7(); })};

    bool ok = true;
    for (const auto& [number, entry] : results) {
        const auto& [name, t] = entry;
        std::ostringstream line;
        line.precision(2);
        line << std::fixed << (t.result.ok ? "PASS" : "FAIL") << " criterion " << number << " (" << name
             << "): " << t.result.detail << " [" << t.seconds << "s]";
        std::cout << line.str() << '\n';
        ok = ok && t.result.ok;
    }
    return ok ? 0 : 1;
}
