#pragma once

#include "hyperplay/automata/alphabet.hpp"
#include "hyperplay/core/lasso.hpp"
#include "hyperplay/core/ltl.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hyperplay::automata {

using nba_state = std::uint32_t;

// Nondeterministic Büchi automaton with cube-guarded edges; accepting states
// must be visited infinitely often.
struct nba
{
    struct edge
    {
        cube guard;
        nba_state target;
    };

    automata::alphabet alphabet;
    std::vector<nba_state> initial;
    std::vector<std::vector<edge>> out;
    std::vector<char> accepting;
    std::vector<std::string> names;  // per state, for exports

    [[nodiscard]] std::size_t num_states() const noexcept { return out.size(); }
    nba_state add_state(bool is_accepting, std::string name = {});

    // Sorted, duplicate-free successors of `q` on `l`.
    [[nodiscard]] std::vector<nba_state> successors(nba_state q, letter l) const;
    [[nodiscard]] bool is_complete() const;
    // Single initial state and at most one successor per (state, letter).
    [[nodiscard]] bool is_deterministic() const;
};

// Routes every uncovered letter to a fresh non-accepting sink.
void complete(nba& a);

// Tableau translation: expands obligations into cube-guarded transitions,
// producing a generalized Büchi automaton (one set per until) which is then
// degeneralized with a counter. The formula is brought to NNF first. The
// result is complete. Throws std::invalid_argument when the formula mentions
// an atom the alphabet does not track.
nba ltl_to_nba(const formula& f, const alphabet& ab);
nba ltl_to_nba(const formula& f);

// Lasso membership by searching the product with the lasso positions for a
// reachable cycle through an accepting state.
bool nba_accepts_lasso(const nba& a, const lasso_word& word);

} // namespace hyperplay::automata
