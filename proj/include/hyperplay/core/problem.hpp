#pragma once

#include "hyperplay/core/ltl.hpp"
#include "hyperplay/core/transition_system.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace hyperplay {

enum class quantifier : std::uint8_t { forall, exists };

std::string_view to_string(quantifier q) noexcept;

struct quantified_system
{
    transition_system system;
    quantifier quant;
};

// A ∀*∃* HyperLTL instance: the quantifier prefix is the order of `systems`,
// each quantified trace ranging over its own system.
class hyper_problem
{
public:
    // Throws hyperplay::error when an invariant is violated.
    hyper_problem(std::vector<quantified_system> systems, formula body, std::vector<formula> prophecies = {});

    [[nodiscard]] const std::vector<quantified_system>& systems() const noexcept { return systems_; }
    [[nodiscard]] const formula& body() const noexcept { return body_; }
    [[nodiscard]] const std::vector<formula>& prophecies() const noexcept { return prophecies_; }

    // Universal systems come first, so indices [0, universal_count()) are ∀.
    [[nodiscard]] std::size_t universal_count() const noexcept { return universal_count_; }
    [[nodiscard]] std::size_t existential_count() const noexcept { return systems_.size() - universal_count_; }
    [[nodiscard]] std::optional<std::size_t> index_of(std::string_view name) const;
    [[nodiscard]] std::set<std::string> system_names() const;

    // Same systems and body with the prophecy list replaced (revalidated).
    [[nodiscard]] hyper_problem with_prophecies(std::vector<formula> prophecies) const;

private:
    std::vector<quantified_system> systems_;
    formula body_;
    std::vector<formula> prophecies_;
    std::size_t universal_count_ = 0;
};

// Problem document:
//   { "systems": [ { "name", "quantifier": "forall"|"exists", "initial",
//                    "states": [ { "id", "labels": [..], "successors": [..] } ] } ],
//     "formula": "...", "prophecies": ["..."] }
hyper_problem parse_problem(const nlohmann::json& document);
hyper_problem parse_problem_text(std::string_view text);

// Canonical document (states sorted, formulas pretty-printed).
nlohmann::json to_json(const hyper_problem& problem);

} // namespace hyperplay
