#include "hyperplay/automata/nba.hpp"

#include "hyperplay/core/graph.hpp"

#include <algorithm>
#include <optional>

namespace hyperplay::automata {

nba_state nba::add_state(bool is_accepting, std::string name)
{
    out.emplace_back();
    accepting.push_back(is_accepting ? 1 : 0);
    names.push_back(std::move(name));
    return static_cast<nba_state>(out.size() - 1);
}

std::vector<nba_state> nba::successors(nba_state q, letter l) const
{
    std::vector<nba_state> succ;
    for (const auto& e : out[q])
        if (e.guard.matches(l))
            succ.push_back(e.target);
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    return succ;
}

bool nba::is_complete() const
{
    for (nba_state q = 0; q < num_states(); ++q)
        for (letter l = 0; l < alphabet.num_letters(); ++l)
            if (std::none_of(out[q].begin(), out[q].end(), [l](const edge& e) { return e.guard.matches(l); }))
                return false;
    return true;
}

bool nba::is_deterministic() const
{
    if (initial.size() != 1)
        return false;
    for (nba_state q = 0; q < num_states(); ++q)
        for (letter l = 0; l < alphabet.num_letters(); ++l)
            if (successors(q, l).size() > 1)
                return false;
    return true;
}

void complete(nba& a)
{
    const letter full = a.alphabet.full_mask();
    std::optional<nba_state> sink;
    const std::size_t n = a.num_states();
    for (nba_state q = 0; q < n; ++q) {
        for (letter l = 0; l < a.alphabet.num_letters(); ++l) {
            const auto& edges = a.out[q];
            if (std::any_of(edges.begin(), edges.end(), [l](const nba::edge& e) { return e.guard.matches(l); }))
                continue;
            if (!sink) {
                sink = a.add_state(false, "sink");
                a.out[*sink].push_back({cube{}, *sink});
            }
            a.out[q].push_back({cube{l, static_cast<letter>(full & ~l)}, *sink});
        }
    }
}

bool nba_accepts_lasso(const nba& a, const lasso_word& word)
{
    const std::size_t len = word.length();
    const std::size_t n = a.num_states();
    std::vector<letter> letters(len);
    for (std::size_t i = 0; i < len; ++i)
        letters[i] = a.alphabet.encode(word.at(i));

    auto id = [len](nba_state q, std::size_t pos) { return static_cast<graph::node>(q * len + pos); };
    graph::adjacency succ(n * len);
    for (nba_state q = 0; q < n; ++q)
        for (std::size_t pos = 0; pos < len; ++pos)
            for (nba_state t : a.successors(q, letters[pos]))
                succ[id(q, pos)].push_back(id(t, word.next(pos)));

    std::vector<graph::node> sources;
    for (nba_state q : a.initial)
        sources.push_back(id(q, 0));
    const auto reach = graph::reachable(succ, sources);
    const auto scc = graph::strongly_connected_components(succ, reach);
    for (nba_state q = 0; q < n; ++q) {
        if (!a.accepting[q])
            continue;
        for (std::size_t pos = 0; pos < len; ++pos) {
            const auto v = id(q, pos);
            if (reach[v] && scc.cyclic[scc.component[v]])
                return true;
        }
    }
    return false;
}

} // namespace hyperplay::automata
