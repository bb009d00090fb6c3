#pragma once

#include "hyperplay/core/lasso.hpp"
#include "hyperplay/core/ltl.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hyperplay::automata {

// A letter is a total assignment to the tracked variables, bit i = vars()[i].
using letter = std::uint32_t;

inline constexpr std::size_t max_tracked_variables = 16;

class alphabet
{
public:
    alphabet() = default;
    // Throws hyperplay::error(budget_exceeded) beyond max_tracked_variables.
    explicit alphabet(const std::set<atom>& variables);

    [[nodiscard]] const std::vector<atom>& vars() const noexcept { return vars_; }
    [[nodiscard]] std::size_t size() const noexcept { return vars_.size(); }
    [[nodiscard]] std::size_t num_letters() const noexcept { return std::size_t{1} << vars_.size(); }
    [[nodiscard]] letter full_mask() const noexcept { return static_cast<letter>(num_letters() - 1); }
    [[nodiscard]] std::optional<std::size_t> index_of(const atom& a) const;

    // Untracked atoms are projected away.
    [[nodiscard]] letter encode(const letter_set& letters) const;
    [[nodiscard]] letter_set decode(letter l) const;
    [[nodiscard]] std::string describe(letter l) const;

    friend bool operator==(const alphabet&, const alphabet&) = default;

private:
    std::vector<atom> vars_;
};

// Conjunction of literals: `pos` must be set, `neg` must be clear.
struct cube
{
    letter pos = 0;
    letter neg = 0;

    [[nodiscard]] bool matches(letter l) const noexcept { return (l & pos) == pos && (l & neg) == 0; }
    [[nodiscard]] bool satisfiable() const noexcept { return (pos & neg) == 0; }

    friend auto operator<=>(const cube&, const cube&) = default;
};

std::string describe(const alphabet& ab, const cube& c);

} // namespace hyperplay::automata
