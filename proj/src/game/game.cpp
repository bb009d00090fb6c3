#include "hyperplay/game/game.hpp"

#include "hyperplay/core/error.hpp"

#include <algorithm>
#include <sstream>

namespace hyperplay::game {

letter_set game_letter(const hyper_problem& problem, std::span<const state_id> states, std::uint32_t bits)
{
    letter_set out;
    const auto& systems = problem.systems();
    for (std::size_t i = 0; i < systems.size() && i < states.size(); ++i)
        for (const auto& ap : systems[i].system.labels(states[i]))
            out.insert(atom{ap, systems[i].system.name()});
    for (std::size_t j = 0; j < problem.prophecies().size(); ++j)
        if (bits >> j & 1)
            out.insert(prophecy_variable(j + 1));
    return out;
}

std::optional<node_id> parity_game::find(const game_node& n) const
{
    if (auto it = index_.find(n); it != index_.end())
        return it->second;
    return std::nullopt;
}

std::string parity_game::key(node_id v) const
{
    const game_node& n = node(v);
    const auto& systems = problem_.systems();
    std::ostringstream os;
    os << (n.kind == node_kind::universal_choice ? "U[" : "E[");
    for (std::size_t i = 0; i < n.states.size(); ++i)
        os << (i ? " " : "") << systems[i].system.name() << '=' << n.states[i];
    os << " | q" << n.q;
    if (n.kind == node_kind::existential_choice) {
        os << " |";
        for (std::size_t i = 0; i < n.pending.size(); ++i)
            os << ' ' << systems[i].system.name() << "->" << n.pending[i];
        for (std::size_t j = 0; j < problem_.prophecies().size(); ++j)
            os << " p" << j + 1 << '=' << (n.bits >> j & 1);
    }
    os << ']';
    return os.str();
}

namespace {

// Letter contribution of every (system, state), so a position's letter is the
// OR of one mask per system and one bit per prophecy.
class letter_encoder
{
public:
    letter_encoder(const hyper_problem& problem, const automata::alphabet& ab)
    {
        for (const auto& qs : problem.systems()) {
            auto& masks = masks_.emplace_back();
            for (const auto& st : qs.system.states()) {
                automata::letter m = 0;
                for (const auto& ap : st.labels)
                    if (auto i = ab.index_of(atom{ap, qs.system.name()}))
                        m |= automata::letter{1} << *i;
                masks.emplace(st.id, m);
            }
        }
        for (std::size_t j = 0; j < problem.prophecies().size(); ++j) {
            const auto i = ab.index_of(prophecy_variable(j + 1));
            prophecy_.push_back(i ? automata::letter{1} << *i : 0);
        }
    }

    automata::letter operator()(std::span<const state_id> states, std::uint32_t bits) const
    {
        automata::letter l = 0;
        for (std::size_t i = 0; i < states.size(); ++i)
            l |= masks_[i].at(states[i]);
        for (std::size_t j = 0; j < prophecy_.size(); ++j)
            if (bits >> j & 1)
                l |= prophecy_[j];
        return l;
    }

private:
    std::vector<std::map<state_id, automata::letter>> masks_;
    std::vector<automata::letter> prophecy_;
};

// Calls `visit` with every tuple of the cartesian product, last coordinate
// fastest, which is lexicographic order for sorted choice lists.
template <class Visit>
void for_each_tuple(const std::vector<std::span<const state_id>>& choices, Visit visit)
{
    std::vector<std::size_t> idx(choices.size(), 0);
    std::vector<state_id> tuple(choices.size());
    while (true) {
        for (std::size_t i = 0; i < choices.size(); ++i)
            tuple[i] = choices[i][idx[i]];
        visit(tuple);
        std::size_t i = choices.size();
        while (i > 0) {
            --i;
            if (++idx[i] < choices[i].size())
                break;
            idx[i] = 0;
            if (i == 0)
                return;
        }
        if (choices.empty())
            return;
    }
}

} // namespace

parity_game build_parity_game(const hyper_problem& problem, const automata::dpa& dpa, const game_options& options)
{
    parity_game g(problem, dpa.alphabet());
    const letter_encoder encode(problem, dpa.alphabet());
    const auto& systems = problem.systems();
    const std::size_t k = problem.universal_count();
    const std::uint32_t bit_vectors = std::uint32_t{1} << problem.prophecies().size();

    auto intern = [&](game_node n) {
        auto [it, fresh] = g.index_.emplace(n, static_cast<node_id>(g.nodes_.size()));
        if (fresh) {
            if (g.nodes_.size() >= options.node_budget)
                throw error(errc::budget_exceeded,
                            "parity game exceeds the node budget of " + std::to_string(options.node_budget));
            const player owner =
                n.kind == node_kind::universal_choice ? player::universal : player::existential;
            g.arena_.add_node(owner, dpa.priority_of(n.q));
            g.nodes_.push_back(std::move(n));
        }
        return it->second;
    };

    game_node init;
    for (const auto& qs : systems)
        init.states.push_back(qs.system.initial());
    init.q = dpa.step(dpa.initial(), encode(init.states, 0));
    intern(std::move(init));

    for (node_id v = 0; v < g.nodes_.size(); ++v) {
        const game_node n = g.nodes_[v];
        std::vector<node_id> out;
        if (n.kind == node_kind::universal_choice) {
            std::vector<std::span<const state_id>> choices;
            for (std::size_t i = 0; i < k; ++i)
                choices.push_back(systems[i].system.successors(n.states[i]));
            for_each_tuple(choices, [&](const std::vector<state_id>& pending) {
                for (std::uint32_t bits = 0; bits < bit_vectors; ++bits)
                    out.push_back(intern(game_node{n.q, n.states, pending, bits, node_kind::existential_choice}));
            });
        } else {
            std::vector<std::span<const state_id>> choices;
            for (std::size_t i = k; i < systems.size(); ++i)
                choices.push_back(systems[i].system.successors(n.states[i]));
            std::vector<game_node> targets;
            for_each_tuple(choices, [&](const std::vector<state_id>& response) {
                game_node t;
                t.states = n.pending;
                t.states.insert(t.states.end(), response.begin(), response.end());
                t.q = dpa.step(n.q, encode(t.states, n.bits));
                targets.push_back(std::move(t));
            });
            std::sort(targets.begin(), targets.end());
            for (auto& t : targets)
                out.push_back(intern(std::move(t)));
        }
        g.arena_.succ[v] = std::move(out);
    }
    return g;
}

std::string to_dot(const parity_game& g)
{
    std::ostringstream os;
    os << "digraph game {\n";
    for (node_id v = 0; v < g.size(); ++v) {
        const bool universal = g.arena().owner[v] == player::universal;
        os << "  n" << v << " [shape=" << (universal ? "box" : "diamond") << ", label=\"" << g.key(v) << "\\n"
           << g.arena().prio[v] << "\"" << (v == g.initial() ? ", penwidth=2" : "") << "];\n";
    }
    for (node_id v = 0; v < g.size(); ++v)
        for (node_id w : g.arena().succ[v])
            os << "  n" << v << " -> n" << w << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace hyperplay::game
