#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace hyperplay::graph {

using node = std::uint32_t;
using adjacency = std::vector<std::vector<node>>;

inline constexpr node no_component = std::numeric_limits<node>::max();

struct scc_decomposition
{
    std::vector<node> component;  // no_component for inactive nodes
    std::vector<char> cyclic;     // per component: contains at least one edge
    std::size_t count = 0;
};

// Tarjan's algorithm on the subgraph induced by `active` (empty = all nodes).
scc_decomposition strongly_connected_components(const adjacency& succ, const std::vector<char>& active = {});

// Nodes reachable from `sources` (inclusive) inside the induced subgraph.
std::vector<char> reachable(const adjacency& succ, std::span<const node> sources, const std::vector<char>& active = {});

adjacency transpose(const adjacency& succ);

} // namespace hyperplay::graph
