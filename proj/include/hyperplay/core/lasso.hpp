#pragma once

#include "hyperplay/core/ltl.hpp"

#include <set>
#include <string>
#include <vector>

namespace hyperplay {

// A letter lists the atoms that hold; prophecy variables appear as atoms too.
using letter_set = std::set<atom>;

// Ultimately periodic word stem · loop^ω.
struct lasso_word
{
    std::vector<letter_set> stem;
    std::vector<letter_set> loop;  // non-empty

    [[nodiscard]] std::size_t length() const noexcept { return stem.size() + loop.size(); }
    // Position following `i` on the lasso.
    [[nodiscard]] std::size_t next(std::size_t i) const noexcept { return i + 1 < length() ? i + 1 : stem.size(); }
    [[nodiscard]] const letter_set& at(std::size_t i) const { return i < stem.size() ? stem[i] : loop[i - stem.size()]; }
};

std::string to_string(const lasso_word& word);

// Truth of `f` at position 0 of the lasso, by least/greatest fixpoints of the
// temporal operators over the finite set of lasso positions. Handles every
// operator directly, so it doubles as an oracle for the normal forms and the
// automata. Throws std::invalid_argument on an empty loop.
bool eval_ltl_on_lasso(const formula& f, const lasso_word& word);

// Truth value of `f` at every lasso position.
std::vector<bool> eval_ltl_positions(const formula& f, const lasso_word& word);

} // namespace hyperplay
