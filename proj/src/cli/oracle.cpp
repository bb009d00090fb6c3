#include "hyperplay/cli/commands.hpp"

#include "hyperplay/cli/random.hpp"

#include <algorithm>
#include <ostream>

namespace hyperplay::cli {

oracle_report run_oracle(const oracle_options& options)
{
    rng gen(options.seed);
    const auto atoms = atom_universe(1, 2);
    const automata::alphabet ab({atoms.begin(), atoms.end()});
    oracle_report report;
    for (std::size_t i = 0; i < options.count; ++i) {
        const formula f = random_formula_upto(gen, options.max_size, atoms);
        const lasso_word w = random_lasso(gen, atoms, options.max_stem, options.max_loop);
        automata::dpa d = automata::ltl_to_dpa(f, ab);
        if (options.corrupt_priority) {
            const auto& prio = d.priorities();
            const auto top = std::max_element(prio.begin(), prio.end());
            d.set_priority(static_cast<automata::dpa_state>(top - prio.begin()), *top + 1);
        }
        const bool expected = eval_ltl_on_lasso(f, w);
        const bool got = automata::dpa_accepts_lasso(d, w);
        ++report.total;
        if (got == expected) {
            ++report.agree;
            continue;
        }
        report.failures.push_back("case " + std::to_string(i) + ": formula " + to_string(f) + " lasso " + to_string(w) +
                                  " dpa=" + (got ? "accept" : "reject") + " oracle=" + (expected ? "true" : "false"));
    }
    return report;
}

int cmd_oracle(const oracle_options& options, std::ostream& out, std::ostream&)
{
    const oracle_report r = run_oracle(options);
    constexpr std::size_t shown = 20;
    for (std::size_t i = 0; i < r.failures.size() && i < shown; ++i)
        out << "MISMATCH " << r.failures[i] << '\n';
    if (r.failures.size() > shown)
        out << "... " << r.failures.size() - shown << " more\n";
    out << r.agree << '/' << r.total << " agree\n";
    return r.agree == r.total ? exit_ok : exit_no_strategy;
}

} // namespace hyperplay::cli
