#include "hyperplay/core/error.hpp"

namespace hyperplay {

std::string_view to_string(errc code) noexcept
{
    switch (code) {
    case errc::syntax: return "syntax";
    case errc::empty_input: return "empty-input";
    case errc::unknown_system: return "unknown-system";
    case errc::schema: return "schema";
    case errc::empty_successors: return "empty-successors";
    case errc::unknown_state: return "unknown-state";
    case errc::quantifier_prefix: return "quantifier-prefix";
    case errc::prophecy_scope: return "prophecy-scope";
    case errc::duplicate_system: return "duplicate-system";
    case errc::budget_exceeded: return "budget-exceeded";
    case errc::no_winning_strategy: return "no-winning-strategy";
    case errc::illegal_move: return "illegal-move";
    case errc::session_inactive: return "session-inactive";
    case errc::index_out_of_range: return "index-out-of-range";
    case errc::bad_blob: return "bad-blob";
    }
    return "unknown";
}

error::error(errc code, const std::string& message, std::optional<std::size_t> position)
    : std::runtime_error(message), code_(code), position_(position)
{
}

} // namespace hyperplay
