#include "hyperplay/automata/dpa.hpp"

#include "hyperplay/core/error.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>

namespace hyperplay::automata {

namespace {

using state_set = std::vector<nba_state>;  // sorted
using tree_code = std::vector<std::uint32_t>;

state_set set_union(const state_set& a, const state_set& b)
{
    state_set out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

state_set set_difference(const state_set& a, const state_set& b)
{
    state_set out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Safra tree node while a step is being computed. Names order nodes by age:
// parents are older than their children and older siblings come first.
struct tree_node
{
    std::uint32_t name = 0;
    state_set label;
    std::vector<std::size_t> children;
    bool fresh = false;
    bool alive = true;
};

// Canonical preorder encoding: name, |label|, label..., #children, children.
void encode(const std::vector<tree_node>& nodes, std::size_t v, const std::vector<std::uint32_t>& rename, tree_code& out)
{
    const auto& n = nodes[v];
    out.push_back(rename[n.name]);
    out.push_back(static_cast<std::uint32_t>(n.label.size()));
    out.insert(out.end(), n.label.begin(), n.label.end());
    std::uint32_t alive_children = 0;
    for (std::size_t c : n.children)
        alive_children += nodes[c].alive ? 1 : 0;
    out.push_back(alive_children);
    for (std::size_t c : n.children)
        if (nodes[c].alive)
            encode(nodes, c, rename, out);
}

std::size_t decode(const tree_code& code, std::size_t& pos, std::vector<tree_node>& nodes)
{
    const std::size_t v = nodes.size();
    nodes.emplace_back();
    nodes[v].name = code[pos++];
    const std::uint32_t size = code[pos++];
    nodes[v].label.assign(code.begin() + static_cast<std::ptrdiff_t>(pos), code.begin() + static_cast<std::ptrdiff_t>(pos + size));
    pos += size;
    const std::uint32_t children = code[pos++];
    for (std::uint32_t i = 0; i < children; ++i) {
        const std::size_t c = decode(code, pos, nodes);
        nodes[v].children.push_back(c);
    }
    return v;
}

std::string describe_tree(const tree_code& code)
{
    if (code.empty())
        return "()";
    std::vector<tree_node> nodes;
    std::size_t pos = 0;
    decode(code, pos, nodes);
    auto print = [&](std::size_t v, auto& self) -> std::string {
        std::string out = "(" + std::to_string(nodes[v].name) + ":{";
        for (std::size_t i = 0; i < nodes[v].label.size(); ++i)
            out += (i ? "," : "") + std::to_string(nodes[v].label[i]);
        out += "}";
        for (std::size_t c : nodes[v].children)
            out += " " + self(c, self);
        return out + ")";
    };
    return print(0, print);
}

class safra_construction
{
public:
    explicit safra_construction(const nba& a) : a_(a), letters_(a.alphabet.num_letters())
    {
        succ_.resize(a.num_states() * letters_);
        for (nba_state q = 0; q < a.num_states(); ++q)
            for (letter l = 0; l < letters_; ++l)
                succ_[q * letters_ + l] = a.successors(q, l);
        for (nba_state q = 0; q < a.num_states(); ++q)
            if (a.accepting[q])
                accepting_.push_back(q);
    }

    [[nodiscard]] tree_code initial() const
    {
        state_set init(a_.initial.begin(), a_.initial.end());
        std::sort(init.begin(), init.end());
        init.erase(std::unique(init.begin(), init.end()), init.end());
        if (init.empty())
            return {};
        tree_code code{0, static_cast<std::uint32_t>(init.size())};
        code.insert(code.end(), init.begin(), init.end());
        code.push_back(0);
        return code;
    }

    // Successor tree and the max-even priority of the step. Older names
    // dominate, and at the same name a red event outranks a green one.
    std::pair<tree_code, priority> step(const tree_code& code, letter l) const
    {
        if (code.empty())
            return {{}, no_event()};
        std::vector<tree_node> nodes;
        std::size_t pos = 0;
        decode(code, pos, nodes);
        const std::size_t existing = nodes.size();

        for (auto& n : nodes)
            n.label = successors(n.label, l);

        // Spawn a youngest child holding the accepting successors.
        auto next_name = static_cast<std::uint32_t>(existing);
        for (std::size_t v = 0; v < existing; ++v) {
            state_set acc;
            std::set_intersection(nodes[v].label.begin(), nodes[v].label.end(), accepting_.begin(), accepting_.end(),
                                  std::back_inserter(acc));
            if (acc.empty())
                continue;
            tree_node child;
            child.name = next_name++;
            child.label = std::move(acc);
            child.fresh = true;
            nodes.push_back(std::move(child));
            nodes[v].children.push_back(nodes.size() - 1);
        }

        // A state stays only in the oldest branch that holds it.
        horizontal_merge(nodes, 0, {});

        std::optional<std::uint32_t> red;
        std::optional<std::uint32_t> green;
        auto note = [](std::optional<std::uint32_t>& slot, std::uint32_t name) {
            slot = slot ? std::min(*slot, name) : name;
        };
        for (auto& n : nodes) {
            if (n.label.empty()) {
                n.alive = false;
                if (!n.fresh)
                    note(red, n.name);
            }
        }

        // A node whose children cover its label turns green and absorbs them.
        vertical_merge(nodes, 0, green, note);

        priority p = no_event();
        if (red && (!green || *red < *green))
            p = red_priority(*red);
        else if (green)
            p = green_priority(*green);

        if (!nodes[0].alive)
            return {{}, p};

        std::vector<std::uint32_t> names;
        for (const auto& n : nodes)
            if (n.alive)
                names.push_back(n.name);
        std::sort(names.begin(), names.end());
        std::vector<std::uint32_t> rename(next_name, 0);
        for (std::size_t i = 0; i < names.size(); ++i)
            rename[names[i]] = static_cast<std::uint32_t>(i);
        tree_code out;
        encode(nodes, 0, rename, out);
        return {std::move(out), p};
    }

    [[nodiscard]] priority no_event() const noexcept { return 1; }

private:
    [[nodiscard]] priority green_priority(std::uint32_t name) const
    {
        return static_cast<priority>(2 * (a_.num_states() - name));
    }
    [[nodiscard]] priority red_priority(std::uint32_t name) const
    {
        return static_cast<priority>(2 * (a_.num_states() - name) + 1);
    }

    state_set successors(const state_set& s, letter l) const
    {
        state_set out;
        for (nba_state q : s) {
            const auto& t = succ_[q * letters_ + l];
            out.insert(out.end(), t.begin(), t.end());
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    static void horizontal_merge(std::vector<tree_node>& nodes, std::size_t v, const state_set& removed)
    {
        if (!removed.empty())
            nodes[v].label = set_difference(nodes[v].label, removed);
        state_set claimed = removed;
        for (std::size_t c : nodes[v].children) {
            horizontal_merge(nodes, c, claimed);
            claimed = set_union(claimed, nodes[c].label);
        }
    }

    template <class Note>
    static void vertical_merge(std::vector<tree_node>& nodes, std::size_t v, std::optional<std::uint32_t>& green, Note note)
    {
        if (!nodes[v].alive)
            return;
        state_set covered;
        bool has_children = false;
        for (std::size_t c : nodes[v].children) {
            if (!nodes[c].alive)
                continue;
            has_children = true;
            covered = set_union(covered, nodes[c].label);
        }
        if (has_children && covered == nodes[v].label) {
            note(green, nodes[v].name);
            kill_descendants(nodes, v);
            return;
        }
        for (std::size_t c : nodes[v].children)
            vertical_merge(nodes, c, green, note);
    }

    static void kill_descendants(std::vector<tree_node>& nodes, std::size_t v)
    {
        for (std::size_t c : nodes[v].children) {
            nodes[c].alive = false;
            kill_descendants(nodes, c);
        }
    }

    const nba& a_;
    std::size_t letters_;
    std::vector<state_set> succ_;
    state_set accepting_;
};

[[noreturn]] void over_budget(std::size_t budget)
{
    throw error(errc::budget_exceeded, "parity automaton exceeds the state budget of " + std::to_string(budget));
}

dpa from_deterministic(const nba& a, const determinize_options& options)
{
    if (a.num_states() > options.state_budget)
        over_budget(options.state_budget);
    const std::size_t letters = a.alphabet.num_letters();
    std::vector<dpa_state> table(a.num_states() * letters);
    std::vector<priority> prio(a.num_states());
    for (nba_state q = 0; q < a.num_states(); ++q) {
        prio[q] = a.accepting[q] ? 2 : 1;
        for (letter l = 0; l < letters; ++l)
            table[q * letters + l] = a.successors(q, l).front();
    }
    return dpa(a.alphabet, a.initial.front(), compress_priorities(prio), std::move(table), a.names);
}

} // namespace

dpa nba_to_dpa(const nba& a, const determinize_options& options)
{
    if (options.allow_fast_path && a.is_deterministic() && a.is_complete())
        return from_deterministic(a, options);

    const safra_construction safra(a);
    const std::size_t letters = a.alphabet.num_letters();

    // DPA states pair a Safra tree with the priority of the step entering it.
    std::map<std::pair<tree_code, priority>, dpa_state> ids;
    std::vector<const std::pair<const std::pair<tree_code, priority>, dpa_state>*> states;
    auto intern = [&](tree_code code, priority p) {
        auto [it, fresh] = ids.emplace(std::make_pair(std::move(code), p), static_cast<dpa_state>(states.size()));
        if (fresh) {
            if (states.size() >= options.state_budget)
                over_budget(options.state_budget);
            states.push_back(&*it);
        }
        return it->second;
    };

    const dpa_state init = intern(safra.initial(), safra.no_event());
    std::vector<dpa_state> table;
    for (std::size_t i = 0; i < states.size(); ++i) {
        const tree_code code = states[i]->first.first;
        table.resize((i + 1) * letters);
        for (letter l = 0; l < letters; ++l) {
            auto [next, p] = safra.step(code, l);
            table[i * letters + l] = intern(std::move(next), p);
        }
    }

    std::vector<priority> prio(states.size());
    std::vector<std::string> names(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
        prio[i] = states[i]->first.second;
        names[i] = describe_tree(states[i]->first.first) + " /" + std::to_string(prio[i]);
    }
    return dpa(a.alphabet, init, compress_priorities(prio), std::move(table), std::move(names));
}

dpa ltl_to_dpa(const formula& f, const alphabet& ab, const determinize_options& options)
{
    return nba_to_dpa(ltl_to_nba(f, ab), options);
}

} // namespace hyperplay::automata
