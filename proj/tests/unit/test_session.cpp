#include "hyperplay/cli/random.hpp"
#include "hyperplay/core/error.hpp"
#include "hyperplay/session/blob.hpp"
#include "hyperplay/session/session.hpp"
#include "support/fixtures.hpp"

#include <doctest.h>

using namespace hyperplay;
using namespace hyperplay::session;

namespace {

game_session start(const std::string& fixture)
{
    auto out = start_session(testing::load_fixture(fixture));
    REQUIRE(std::holds_alternative<game_session>(out));
    return std::get<game_session>(out);
}

template <class F>
errc error_of(F&& f)
{
    try {
        f();
    } catch (const error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return errc::syntax;
}

} // namespace

TEST_CASE("example 1: start, preview, commit")
{
    const auto s = start("example1.json");
    CHECK(s.states() == std::vector<state_id>{0, 0});
    CHECK(s.history().size() == 1);
    CHECK(s.status() == status::active);

    const auto p = preview_move(s, {{1}, {}});
    CHECK(p.response == std::vector<state_id>{2});
    CHECK_FALSE(p.next_monitor_state.has_value());
    const auto again = preview_move(s, {{1}, {}});
    CHECK(again.response == p.response);
    CHECK(again.next_dpa_state == p.next_dpa_state);
    CHECK(s.history().size() == 1);

    const auto s1 = commit_move(s, {{1}, {}});
    CHECK(s1.states() == std::vector<state_id>{1, 2});
    CHECK(s1.dpa_state() == p.next_dpa_state);
    CHECK(s1.current().step == 1);
    CHECK(s1.current().last->response == std::vector<state_id>{2});
    CHECK(s.history().size() == 1);  // the original is untouched

    CHECK(error_of([&] { (void)commit_move(s, {{3}, {}}); }) == errc::illegal_move);
    CHECK(error_of([&] { (void)commit_move(s, {{1, 1}, {}}); }) == errc::illegal_move);
    CHECK(error_of([&] { (void)commit_move(s, {{1}, {true}}); }) == errc::illegal_move);
    CHECK(error_of([&] { (void)jump_to(s1, 2); }) == errc::index_out_of_range);
    CHECK(jump_to(s1, 0) == s);
    CHECK(jump_to(s1, 1) == s1);
}

TEST_CASE("example 2: no strategy without prophecy")
{
    auto out = start_session(testing::load_fixture("example2.json"));
    CHECK(std::holds_alternative<no_strategy>(out));
}

TEST_CASE("example 2 with prophecy: B follows the declaration, contradiction freezes play")
{
    const auto s = start("example2_prophecy.json");
    for (state_id a : {0u, 1u}) {
        CHECK(preview_move(s, {{a}, {true}}).response == std::vector<state_id>{1});
        CHECK(preview_move(s, {{a}, {false}}).response == std::vector<state_id>{0});
    }

    const auto s1 = commit_move(s, {{1}, {true}});
    CHECK(s1.states() == std::vector<state_id>{1, 1});
    CHECK(s1.status() == status::active);
    CHECK(preview_move(s1, {{0}, {false}}).violation);
    CHECK_FALSE(preview_move(s1, {{1}, {false}}).violation);

    const auto s2 = commit_move(s1, {{0}, {false}});
    CHECK(s2.status() == status::prophecy_violated);
    CHECK(error_of([&] { (void)commit_move(s2, {{1}, {true}}); }) == errc::session_inactive);
    CHECK(error_of([&] { (void)preview_move(s2, {{1}, {true}}); }) == errc::session_inactive);

    const auto back = jump_to(s2, 1);
    CHECK(back.status() == status::active);
    CHECK(back == s1);
    CHECK(commit_move(back, {{1}, {false}}).status() == status::active);
    CHECK(jump_to(s2, 2).status() == status::prophecy_violated);
}

TEST_CASE("blob round trip and tampering")
{
    const auto s = commit_move(commit_move(start("example2_prophecy.json"), {{1}, {true}}), {{0}, {false}});
    const auto blob = to_blob(s);
    CHECK(blob["version"] == blob_version);
    CHECK(blob["status"] == "prophecy-violated");
    const auto back = from_blob(blob);
    CHECK(back.history() == s.history());
    CHECK(back.status() == s.status());
    CHECK(to_blob(back) == blob);

    auto tampered = blob;
    tampered["history"][1]["response"][0] = 0;
    CHECK(error_of([&] { (void)from_blob(tampered); }) == errc::bad_blob);

    auto versioned = blob;
    versioned["version"] = 99;
    CHECK(error_of([&] { (void)from_blob(versioned); }) == errc::bad_blob);

    // A consistent digest does not rescue a forged history.
    auto forged = blob;
    forged["history"][1]["response"][0] = 0;
    forged.erase("digest");
    forged["digest"] = blob["digest"];
    CHECK(error_of([&] { (void)from_blob(forged); }) == errc::bad_blob);

    CHECK(error_of([&] { (void)from_blob(nlohmann::json::array()); }) == errc::bad_blob);
    CHECK(error_of([&] { (void)from_blob(nlohmann::json{{"version", 1}}); }) == errc::bad_blob);
}

TEST_CASE("property: random plays stay in the winning region and replay exactly")
{
    cli::rng gen(17);
    cli::problem_bounds bounds;
    bounds.max_states = 3;
    int played = 0;
    for (int i = 0; i < 80 && played < 30; ++i) {
        auto out = start_session(cli::random_problem(gen, bounds));
        if (!std::holds_alternative<game_session>(out))
            continue;
        ++played;
        auto s = std::get<game_session>(out);
        const auto& p = s.eng().problem;
        for (int step = 0; step < 12; ++step) {
            if (s.status() != status::active) {
                s = jump_to(s, std::uniform_int_distribution<std::size_t>(0, s.history().size() - 2)(gen));
                continue;
            }
            universal_move m;
            for (std::size_t u = 0; u < p.universal_count(); ++u) {
                const auto succ = p.systems()[u].system.successors(s.states()[u]);
                m.successors.push_back(succ[std::uniform_int_distribution<std::size_t>(0, succ.size() - 1)(gen)]);
            }
            for (std::size_t j = 0; j < p.prophecies().size(); ++j)
                m.prophecies.push_back(std::uniform_int_distribution<int>(0, 1)(gen) == 1);
            const auto preview = preview_move(s, m);
            s = commit_move(s, m);
            CHECK(s.current().node == preview.next_node);
            if (s.status() == status::active)
                CHECK(s.eng().solution.wins(game::player::existential, s.current().node));
            // Violation flag is exactly the monitor's empty-language test.
            if (s.eng().monitor)
                CHECK((s.status() == status::prophecy_violated) == s.eng().monitor_empty[*s.current().monitor]);
        }
        const auto blob = to_blob(s);
        CHECK(to_blob(from_blob(blob)) == blob);
    }
    CHECK(played >= 10);
}
