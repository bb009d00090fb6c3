#include "hyperplay/automata/nba.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace hyperplay::automata {

namespace {

using formula_id = int;
using obligation_set = std::set<formula_id>;

struct tableau_edge
{
    cube guard;
    obligation_set next;
    obligation_set pending;  // untils postponed on this edge

    friend auto operator<=>(const tableau_edge&, const tableau_edge&) = default;
};

class tableau
{
public:
    explicit tableau(const alphabet& ab) : ab_(ab) {}

    formula_id intern(const formula& f)
    {
        if (auto it = ids_.find(f); it != ids_.end())
            return it->second;
        switch (f.kind()) {
        case op::negation:
        case op::next:
            intern(f.lhs());
            break;
        case op::conjunction:
        case op::disjunction:
        case op::until:
        case op::release:
            intern(f.lhs());
            intern(f.rhs());
            break;
        default:
            break;
        }
        const auto id = static_cast<formula_id>(table_.size());
        table_.push_back(f);
        ids_.emplace(f, id);
        if (f.kind() == op::until)
            untils_.push_back(id);
        return id;
    }

    [[nodiscard]] const std::vector<formula_id>& untils() const noexcept { return untils_; }
    [[nodiscard]] const formula& at(formula_id id) const { return table_[id]; }

    std::set<tableau_edge> expand(const obligation_set& now)
    {
        std::set<tableau_edge> out;
        expand(now, {}, cube{}, {}, {}, out);
        return out;
    }

private:
    letter bit(const formula& a) const
    {
        const auto i = ab_.index_of(a.get_atom());
        if (!i)
            throw std::invalid_argument("ltl_to_nba: atom '" + to_string(a.get_atom()) + "' is not in the alphabet");
        return letter{1} << *i;
    }

    void expand(obligation_set todo, obligation_set done, cube guard, obligation_set next, obligation_set pending,
                std::set<tableau_edge>& out)
    {
        while (!todo.empty()) {
            const formula_id id = *todo.begin();
            todo.erase(todo.begin());
            if (!done.insert(id).second)
                continue;
            const formula& f = table_[id];
            switch (f.kind()) {
            case op::constant_true:
                break;
            case op::constant_false:
                return;
            case op::atomic:
                guard.pos |= bit(f);
                if (!guard.satisfiable())
                    return;
                break;
            case op::negation:
                guard.neg |= bit(f.lhs());
                if (!guard.satisfiable())
                    return;
                break;
            case op::conjunction:
                todo.insert(ids_.at(f.lhs()));
                todo.insert(ids_.at(f.rhs()));
                break;
            case op::next:
                next.insert(ids_.at(f.lhs()));
                break;
            case op::disjunction: {
                auto left = todo;
                left.insert(ids_.at(f.lhs()));
                expand(std::move(left), done, guard, next, pending, out);
                todo.insert(ids_.at(f.rhs()));
                break;
            }
            case op::until: {
                // Either the goal holds now, or the left side holds and the
                // until is postponed (which withholds its acceptance mark).
                auto now = todo;
                now.insert(ids_.at(f.rhs()));
                expand(std::move(now), done, guard, next, pending, out);
                todo.insert(ids_.at(f.lhs()));
                next.insert(id);
                pending.insert(id);
                break;
            }
            case op::release: {
                auto now = todo;
                now.insert(ids_.at(f.lhs()));
                now.insert(ids_.at(f.rhs()));
                expand(std::move(now), done, guard, next, pending, out);
                todo.insert(ids_.at(f.rhs()));
                next.insert(id);
                break;
            }
            default:
                throw std::invalid_argument("ltl_to_nba: formula is not in negation normal form");
            }
        }
        out.insert(tableau_edge{guard, std::move(next), std::move(pending)});
    }

    const alphabet& ab_;
    std::vector<formula> table_;
    std::map<formula, formula_id> ids_;
    std::vector<formula_id> untils_;
};

// Drops edges implied by another edge with a weaker guard, fewer next
// obligations and fewer postponed untils.
std::vector<tableau_edge> prune_subsumed(const std::set<tableau_edge>& edges)
{
    auto subset = [](const obligation_set& a, const obligation_set& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    auto weaker = [](const cube& a, const cube& b) { return (a.pos & ~b.pos) == 0 && (a.neg & ~b.neg) == 0; };
    std::vector<tableau_edge> in(edges.begin(), edges.end());
    std::vector<tableau_edge> kept;
    for (std::size_t i = 0; i < in.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < in.size() && !dominated; ++j) {
            if (i == j)
                continue;
            const auto& a = in[j];
            const auto& b = in[i];
            // Edges are distinct, so mutual domination cannot happen.
            dominated = weaker(a.guard, b.guard) && subset(a.next, b.next) && subset(a.pending, b.pending);
        }
        if (!dominated)
            kept.push_back(in[i]);
    }
    return kept;
}

std::string describe(const tableau& t, const obligation_set& s)
{
    std::string out = "{";
    bool first = true;
    for (formula_id id : s) {
        if (!first)
            out += ", ";
        first = false;
        out += to_string(t.at(id));
    }
    return out + "}";
}

} // namespace

nba ltl_to_nba(const formula& f, const alphabet& ab)
{
    const formula root = to_nnf(f);
    tableau tab(ab);
    const formula_id root_id = tab.intern(root);
    const std::size_t k = tab.untils().size();

    // Generalized automaton over obligation sets.
    std::map<obligation_set, std::uint32_t> gstate_ids;
    std::vector<obligation_set> gstates;
    std::vector<std::vector<tableau_edge>> gedges;
    auto gstate = [&](const obligation_set& s) {
        auto [it, fresh] = gstate_ids.emplace(s, static_cast<std::uint32_t>(gstates.size()));
        if (fresh)
            gstates.push_back(s);
        return it->second;
    };
    gstate({root_id});
    for (std::size_t i = 0; i < gstates.size(); ++i) {
        auto edges = prune_subsumed(tab.expand(gstates[i]));
        for (const auto& e : edges)
            gstate(e.next);
        gedges.push_back(std::move(edges));
    }

    // Counter degeneralization: state (g, j) has seen acceptance sets 0..j-1
    // since the last accepting visit; j == k marks the accepting copy.
    nba out;
    out.alphabet = ab;
    std::map<std::pair<std::uint32_t, std::size_t>, nba_state> ids;
    std::vector<std::pair<std::uint32_t, std::size_t>> work;
    auto state = [&](std::uint32_t g, std::size_t j) {
        auto [it, fresh] = ids.emplace(std::make_pair(g, j), 0);
        if (fresh) {
            std::string name = describe(tab, gstates[g]);
            if (k > 0)
                name += " #" + std::to_string(j);
            it->second = out.add_state(j == k, std::move(name));
            work.emplace_back(g, j);
        }
        return it->second;
    };
    out.initial.push_back(state(0, 0));
    while (!work.empty()) {
        const auto [g, j] = work.back();
        work.pop_back();
        const nba_state src = ids.at({g, j});
        for (const auto& e : gedges[g]) {
            std::size_t level = (j == k) ? 0 : j;
            while (level < k && !e.pending.contains(tab.untils()[level]))
                ++level;
            const nba_state dst = state(gstate_ids.at(e.next), level);
            out.out[src].push_back({e.guard, dst});
        }
    }
    complete(out);
    return out;
}

nba ltl_to_nba(const formula& f)
{
    return ltl_to_nba(f, alphabet(atoms_of(f)));
}

} // namespace hyperplay::automata
