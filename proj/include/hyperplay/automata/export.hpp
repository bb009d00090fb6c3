#pragma once

#include "hyperplay/automata/dpa.hpp"
#include "hyperplay/automata/nba.hpp"

#include <string>

namespace hyperplay::automata {

// HOA-like text: header with AP list and acceptance, then one `State:` block
// per state with `[guard] target` edges (AP indices as in the alphabet).
std::string to_hoa(const dpa& a);
std::string to_hoa(const nba& a);

// DOT with priorities (DPA) or double circles for accepting states (NBA).
std::string to_dot(const dpa& a);
std::string to_dot(const nba& a);

} // namespace hyperplay::automata
