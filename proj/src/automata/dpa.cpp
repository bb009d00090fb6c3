#include "hyperplay/automata/dpa.hpp"

#include "hyperplay/core/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hyperplay::automata {

dpa::dpa(automata::alphabet ab, dpa_state initial, std::vector<priority> priorities, std::vector<dpa_state> table,
         std::vector<std::string> names)
    : alphabet_(std::move(ab)), initial_(initial), priorities_(std::move(priorities)), table_(std::move(table)),
      names_(std::move(names))
{
    if (table_.size() != priorities_.size() * alphabet_.num_letters())
        throw std::invalid_argument("dpa: transition table has the wrong size");
    if (initial_ >= priorities_.size())
        throw std::invalid_argument("dpa: initial state out of range");
    for (dpa_state t : table_)
        if (t >= priorities_.size())
            throw std::invalid_argument("dpa: transition target out of range");
    names_.resize(priorities_.size());
}

priority dpa::max_priority() const noexcept
{
    return priorities_.empty() ? 0 : *std::max_element(priorities_.begin(), priorities_.end());
}

const std::string& dpa::name(dpa_state q) const { return names_.at(q); }

std::vector<priority> compress_priorities(const std::vector<priority>& priorities)
{
    std::vector<priority> used(priorities);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    std::map<priority, priority> remap;
    priority current = 0;
    for (std::size_t i = 0; i < used.size(); ++i) {
        if (i == 0)
            current = used[0] % 2;
        else if (used[i] % 2 != used[i - 1] % 2)
            ++current;
        remap[used[i]] = current;
    }
    std::vector<priority> out;
    out.reserve(priorities.size());
    for (priority p : priorities)
        out.push_back(remap.at(p));
    return out;
}

bool dpa_accepts_lasso(const dpa& a, const lasso_word& word)
{
    if (word.loop.empty())
        throw std::invalid_argument("lasso loop must be non-empty");
    dpa_state q = a.initial();
    for (const auto& l : word.stem)
        q = a.step(q, a.alphabet().encode(l));

    std::vector<letter> loop;
    for (const auto& l : word.loop)
        loop.push_back(a.alphabet().encode(l));

    // (state, loop offset) -> index into the visited sequence.
    std::map<std::pair<dpa_state, std::size_t>, std::size_t> seen;
    std::vector<dpa_state> visited;
    for (std::size_t t = 0;; ++t) {
        const std::size_t offset = t % loop.size();
        auto [it, fresh] = seen.emplace(std::make_pair(q, offset), visited.size());
        if (!fresh) {
            priority best = 0;
            for (std::size_t i = it->second; i < visited.size(); ++i)
                best = std::max(best, a.priority_of(visited[i]));
            return best % 2 == 0;
        }
        visited.push_back(q);
        q = a.step(q, loop[offset]);
    }
}

std::vector<bool> empty_language_states(const dpa& a)
{
    const std::size_t n = a.num_states();
    graph::adjacency succ(n);
    for (dpa_state q = 0; q < n; ++q) {
        for (letter l = 0; l < a.num_letters(); ++l)
            succ[q].push_back(a.step(q, l));
        std::sort(succ[q].begin(), succ[q].end());
        succ[q].erase(std::unique(succ[q].begin(), succ[q].end()), succ[q].end());
    }

    // A state on a cycle whose maximum priority is an even d lies in a
    // non-trivial SCC of the subgraph restricted to priorities <= d.
    std::vector<graph::node> good;
    for (priority d = 0; d <= a.max_priority(); d += 2) {
        std::vector<char> active(n, 0);
        bool any = false;
        for (dpa_state q = 0; q < n; ++q) {
            active[q] = a.priority_of(q) <= d ? 1 : 0;
            any = any || a.priority_of(q) == d;
        }
        if (!any)
            continue;
        const auto scc = graph::strongly_connected_components(succ, active);
        for (dpa_state q = 0; q < n; ++q)
            if (a.priority_of(q) == d && scc.cyclic[scc.component[q]])
                good.push_back(q);
    }
    const auto can_accept = graph::reachable(graph::transpose(succ), good);
    std::vector<bool> empty(n);
    for (dpa_state q = 0; q < n; ++q)
        empty[q] = !can_accept[q];
    return empty;
}

} // namespace hyperplay::automata
