#include "hyperplay/automata/alphabet.hpp"

#include "hyperplay/core/error.hpp"

#include <algorithm>

namespace hyperplay::automata {

alphabet::alphabet(const std::set<atom>& variables) : vars_(variables.begin(), variables.end())
{
    if (vars_.size() > max_tracked_variables)
        throw error(errc::budget_exceeded, "too many tracked variables (" + std::to_string(vars_.size()) + ", limit " +
                                               std::to_string(max_tracked_variables) + ")");
}

std::optional<std::size_t> alphabet::index_of(const atom& a) const
{
    auto it = std::lower_bound(vars_.begin(), vars_.end(), a);
    if (it == vars_.end() || *it != a)
        return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
}

letter alphabet::encode(const letter_set& letters) const
{
    letter l = 0;
    for (const auto& a : letters)
        if (auto i = index_of(a))
            l |= letter{1} << *i;
    return l;
}

letter_set alphabet::decode(letter l) const
{
    letter_set out;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (l & (letter{1} << i))
            out.insert(vars_[i]);
    return out;
}

std::string alphabet::describe(letter l) const
{
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (!(l & (letter{1} << i)))
            continue;
        if (!first)
            out += ',';
        first = false;
        out += to_string(vars_[i]);
    }
    return out + "}";
}

std::string describe(const alphabet& ab, const cube& c)
{
    std::string out;
    for (std::size_t i = 0; i < ab.size(); ++i) {
        const letter bit = letter{1} << i;
        if (!((c.pos | c.neg) & bit))
            continue;
        if (!out.empty())
            out += " & ";
        if (c.neg & bit)
            out += '!';
        out += to_string(ab.vars()[i]);
    }
    return out.empty() ? "true" : out;
}

} // namespace hyperplay::automata
