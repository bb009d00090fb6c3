#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperplay {

enum class errc {
    syntax,
    empty_input,
    unknown_system,
    schema,
    empty_successors,
    unknown_state,
    quantifier_prefix,
    prophecy_scope,
    duplicate_system,
    budget_exceeded,
    no_winning_strategy,
    illegal_move,
    session_inactive,
    index_out_of_range,
    bad_blob,
};

// Stable machine-readable name, used in API envelopes and CLI diagnostics.
std::string_view to_string(errc code) noexcept;

class error : public std::runtime_error
{
public:
    error(errc code, const std::string& message, std::optional<std::size_t> position = std::nullopt);

    [[nodiscard]] errc code() const noexcept { return code_; }
    // Byte offset into the offending text, for syntax errors.
    [[nodiscard]] const std::optional<std::size_t>& position() const noexcept { return position_; }

private:
    errc code_;
    std::optional<std::size_t> position_;
};

} // namespace hyperplay
