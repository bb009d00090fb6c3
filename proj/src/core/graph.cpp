#include "hyperplay/core/graph.hpp"

#include <algorithm>

namespace hyperplay::graph {

namespace {

bool is_active(const std::vector<char>& active, node v)
{
    return active.empty() || active[v];
}

} // namespace

scc_decomposition strongly_connected_components(const adjacency& succ, const std::vector<char>& active)
{
    const std::size_t n = succ.size();
    constexpr node unvisited = std::numeric_limits<node>::max();
    std::vector<node> index(n, unvisited);
    std::vector<node> low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<node> stack;
    scc_decomposition out;
    out.component.assign(n, no_component);

    struct frame
    {
        node v;
        std::size_t edge;
    };
    std::vector<frame> call;
    node counter = 0;

    for (node root = 0; root < n; ++root) {
        if (!is_active(active, root) || index[root] != unvisited)
            continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            frame& fr = call.back();
            const node v = fr.v;
            if (fr.edge < succ[v].size()) {
                const node w = succ[v][fr.edge++];
                if (!is_active(active, w))
                    continue;
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                const node c = static_cast<node>(out.count++);
                std::size_t members = 0;
                node w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    out.component[w] = c;
                    ++members;
                } while (w != v);
                bool cyclic = members > 1;
                if (!cyclic)
                    cyclic = std::find(succ[v].begin(), succ[v].end(), v) != succ[v].end();
                out.cyclic.push_back(cyclic ? 1 : 0);
            }
            call.pop_back();
            if (!call.empty()) {
                const node parent = call.back().v;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }
    return out;
}

std::vector<char> reachable(const adjacency& succ, std::span<const node> sources, const std::vector<char>& active)
{
    std::vector<char> seen(succ.size(), 0);
    std::vector<node> work;
    for (node s : sources) {
        if (is_active(active, s) && !seen[s]) {
            seen[s] = 1;
            work.push_back(s);
        }
    }
    while (!work.empty()) {
        const node v = work.back();
        work.pop_back();
        for (node w : succ[v]) {
            if (is_active(active, w) && !seen[w]) {
                seen[w] = 1;
                work.push_back(w);
            }
        }
    }
    return seen;
}

adjacency transpose(const adjacency& succ)
{
    adjacency pred(succ.size());
    for (node v = 0; v < succ.size(); ++v)
        for (node w : succ[v])
            pred[w].push_back(v);
    return pred;
}

} // namespace hyperplay::graph
