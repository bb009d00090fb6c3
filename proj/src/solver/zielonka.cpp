#include "hyperplay/solver/zielonka.hpp"

#include <algorithm>
#include <deque>

namespace hyperplay::solver {

namespace {

using mask = std::vector<char>;

class zielonka
{
public:
    explicit zielonka(const game::arena& a) : a_(a), pred_(a.size())
    {
        for (node_id v = 0; v < a.size(); ++v)
            for (node_id w : a.succ[v])
                pred_[w].push_back(v);
        result_.winner.assign(a.size(), player::universal);
        result_.existential = strategy(a.size());
        result_.universal = strategy(a.size());
    }

    solve_result run()
    {
        solve(mask(a_.size(), 1));
        return std::move(result_);
    }

private:
    strategy& strategy_of(player p) { return p == player::existential ? result_.existential : result_.universal; }

    // Nodes of `game` from which `p` forces a visit to `target`; records the
    // attracting move of p's nodes outside the target.
    mask attractor(const mask& game, const mask& target, player p)
    {
        mask attr(a_.size(), 0);
        std::vector<std::size_t> remaining(a_.size(), 0);
        std::deque<node_id> work;
        for (node_id v = 0; v < a_.size(); ++v) {
            if (!game[v])
                continue;
            for (node_id w : a_.succ[v])
                remaining[v] += game[w] ? 1 : 0;
            if (target[v]) {
                attr[v] = 1;
                work.push_back(v);
            }
        }
        auto& strat = strategy_of(p);
        while (!work.empty()) {
            const node_id w = work.front();
            work.pop_front();
            for (node_id v : pred_[w]) {
                if (!game[v] || attr[v])
                    continue;
                if (a_.owner[v] == p) {
                    for (node_id x : a_.succ[v]) {
                        if (game[x] && attr[x]) {
                            strat.set(v, x);
                            break;
                        }
                    }
                } else if (--remaining[v] > 0) {
                    continue;
                }
                attr[v] = 1;
                work.push_back(v);
            }
        }
        return attr;
    }

    // Solves the subgame induced by `game` and writes winners and strategies
    // for its nodes.
    void solve(const mask& game)
    {
        priority top = 0;
        bool any = false;
        for (node_id v = 0; v < a_.size(); ++v) {
            if (game[v]) {
                top = any ? std::max(top, a_.prio[v]) : a_.prio[v];
                any = true;
            }
        }
        if (!any)
            return;

        const player alpha = game::winner_of(top);
        const player beta = game::opponent(alpha);
        mask tops(a_.size(), 0);
        for (node_id v = 0; v < a_.size(); ++v)
            tops[v] = game[v] && a_.prio[v] == top;
        const mask attr = attractor(game, tops, alpha);

        mask rest(a_.size(), 0);
        for (node_id v = 0; v < a_.size(); ++v)
            rest[v] = game[v] && !attr[v];
        solve(rest);

        bool beta_wins_some = false;
        for (node_id v = 0; v < a_.size(); ++v)
            beta_wins_some = beta_wins_some || (rest[v] && result_.winner[v] == beta);

        if (!beta_wins_some) {
            for (node_id v = 0; v < a_.size(); ++v) {
                if (!game[v])
                    continue;
                result_.winner[v] = alpha;
                if (tops[v] && a_.owner[v] == alpha) {
                    for (node_id w : a_.succ[v]) {
                        if (game[w]) {
                            strategy_of(alpha).set(v, w);
                            break;
                        }
                    }
                }
            }
            return;
        }

        mask lost(a_.size(), 0);
        for (node_id v = 0; v < a_.size(); ++v)
            lost[v] = rest[v] && result_.winner[v] == beta;
        const mask beta_attr = attractor(game, lost, beta);
        mask remainder(a_.size(), 0);
        for (node_id v = 0; v < a_.size(); ++v) {
            remainder[v] = game[v] && !beta_attr[v];
            if (beta_attr[v])
                result_.winner[v] = beta;
        }
        solve(remainder);
    }

    const game::arena& a_;
    std::vector<std::vector<node_id>> pred_;
    solve_result result_;
};

} // namespace

solve_result solve_zielonka(const game::arena& a)
{
    solve_result r = zielonka(a).run();
    // Moves recorded for nodes that ended up losing are stale.
    for (node_id v = 0; v < a.size(); ++v) {
        if (a.owner[v] != player::existential || r.winner[v] != player::existential)
            r.existential.clear(v);
        if (a.owner[v] != player::universal || r.winner[v] != player::universal)
            r.universal.clear(v);
    }
    return r;
}

} // namespace hyperplay::solver
