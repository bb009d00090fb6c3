#pragma once

#include "hyperplay/automata/alphabet.hpp"
#include "hyperplay/automata/nba.hpp"
#include "hyperplay/core/lasso.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hyperplay::automata {

using dpa_state = std::uint32_t;
using priority = std::uint32_t;

// Deterministic parity automaton with a total transition table and
// state-based priorities. A run is accepting iff the maximum priority seen
// infinitely often is even.
class dpa
{
public:
    dpa() = default;
    // `table` holds num_states × alphabet.num_letters() targets, row-major.
    dpa(automata::alphabet ab, dpa_state initial, std::vector<priority> priorities, std::vector<dpa_state> table,
        std::vector<std::string> names = {});

    [[nodiscard]] const automata::alphabet& alphabet() const noexcept { return alphabet_; }
    [[nodiscard]] std::size_t num_states() const noexcept { return priorities_.size(); }
    [[nodiscard]] std::size_t num_letters() const noexcept { return alphabet_.num_letters(); }
    [[nodiscard]] dpa_state initial() const noexcept { return initial_; }
    [[nodiscard]] priority priority_of(dpa_state q) const { return priorities_.at(q); }
    [[nodiscard]] const std::vector<priority>& priorities() const noexcept { return priorities_; }
    [[nodiscard]] priority max_priority() const noexcept;
    [[nodiscard]] const std::string& name(dpa_state q) const;

    [[nodiscard]] dpa_state step(dpa_state q, letter l) const { return table_[q * num_letters() + l]; }

    // Fault injection for oracle self-tests.
    void set_priority(dpa_state q, priority p) { priorities_.at(q) = p; }

private:
    automata::alphabet alphabet_;
    dpa_state initial_ = 0;
    std::vector<priority> priorities_;
    std::vector<dpa_state> table_;
    std::vector<std::string> names_;
};

inline constexpr std::size_t default_state_budget = 1'000'000;

struct determinize_options
{
    std::size_t state_budget = default_state_budget;
    // Skip Safra trees when the input is already deterministic and complete.
    bool allow_fast_path = true;
};

// Safra/Piterman determinization with compact node names, emitting a
// max-even state-based parity automaton with compressed priorities. Throws
// hyperplay::error(budget_exceeded) past the state budget.
dpa nba_to_dpa(const nba& a, const determinize_options& options = {});

// ltl_to_nba followed by nba_to_dpa.
dpa ltl_to_dpa(const formula& f, const alphabet& ab, const determinize_options& options = {});

// Renumbers priorities to the smallest values with the same order and parity
// classes; the result starts at 0 or 1 and never exceeds the number of
// distinct input priorities.
std::vector<priority> compress_priorities(const std::vector<priority>& priorities);

// Runs the stem, then loops until a (state, loop position) pair repeats and
// checks the parity of the highest priority on that cycle.
bool dpa_accepts_lasso(const dpa& a, const lasso_word& word);

// Mask of states from which no word is accepted: those that cannot reach a
// cycle whose maximum priority is even.
std::vector<bool> empty_language_states(const dpa& a);

} // namespace hyperplay::automata
