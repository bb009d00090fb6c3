#pragma once

#include "hyperplay/core/error.hpp"
#include "hyperplay/session/engine.hpp"

#include <json.hpp>

#include <list>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

namespace hyperplay::service {

struct service_options
{
    session::engine_options budgets;
    // Engines kept per problem hash; results never depend on the cache.
    std::size_t cache_entries = 16;
};

// {"ok": true, "payload": ...}
nlohmann::json ok_envelope(nlohmann::json payload);
// {"ok": false, "error": {"code", "message", "position"?}}
nlohmann::json error_envelope(std::string_view code, const std::string& message,
                              std::optional<std::size_t> position = std::nullopt);

// Transport-independent request handler. Every response is a function of
// the endpoint and the request body alone; sessions travel in the body as
// blobs.
//
//   parse    problem document                  -> problem echo, automaton summary
//   verify   problem document                  -> {"result", "session"?, "snapshot"?, "status"?}
//   preview  {"session", "move"}               -> strategy response and monitor verdict
//   commit   {"session", "move"}               -> {"session", "snapshot", "status"}
//   jump     {"session", "step"}               -> {"session", "snapshot", "status"}
//
// A move is {"successors": {"A": 1} | [1], "prophecies": [true]}.
class api
{
public:
    explicit api(service_options options = {});

    [[nodiscard]] nlohmann::json handle(std::string_view endpoint, const nlohmann::json& body) const;
    // Same, with the body still as text; malformed JSON yields a schema error.
    [[nodiscard]] nlohmann::json handle_text(std::string_view endpoint, std::string_view body) const;

    static const std::vector<std::string>& endpoints();

private:
    std::shared_ptr<const session::engine> engine_for(const hyper_problem& problem, const std::string& hash) const;

    service_options options_;
    mutable std::mutex mutex_;
    mutable std::list<std::pair<std::string, std::shared_ptr<const session::engine>>> cache_;
};

} // namespace hyperplay::service
