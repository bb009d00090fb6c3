#include "hyperplay/cli/random.hpp"

#include <algorithm>

namespace hyperplay::cli {

namespace {

std::size_t uniform(rng& gen, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(gen);
}

} // namespace

formula random_formula(rng& gen, std::size_t size, const std::vector<atom>& atoms)
{
    if (size <= 1) {
        // Constants are rare so that most leaves carry information.
        const std::size_t pick = uniform(gen, 0, 9);
        if (pick == 0 || atoms.empty())
            return tt();
        if (pick == 1)
            return ff();
        return formula::make_atom(atoms[uniform(gen, 0, atoms.size() - 1)]);
    }
    static constexpr op unary_ops[] = {op::negation, op::next, op::eventually, op::globally};
    static constexpr op binary_ops[] = {op::conjunction, op::disjunction, op::implication,
                                        op::equivalence, op::until, op::release};
    if (size == 2 || uniform(gen, 0, 2) == 0)
        return formula::make_unary(unary_ops[uniform(gen, 0, 3)], random_formula(gen, size - 1, atoms));
    const std::size_t left = uniform(gen, 1, size - 2);
    formula lhs = random_formula(gen, left, atoms);
    formula rhs = random_formula(gen, size - 1 - left, atoms);
    return formula::make_binary(binary_ops[uniform(gen, 0, 5)], std::move(lhs), std::move(rhs));
}

formula random_formula_upto(rng& gen, std::size_t max_size, const std::vector<atom>& atoms)
{
    return random_formula(gen, uniform(gen, 1, std::max<std::size_t>(1, max_size)), atoms);
}

lasso_word random_lasso(rng& gen, const std::vector<atom>& atoms, std::size_t max_stem, std::size_t max_loop)
{
    auto letter = [&] {
        letter_set l;
        for (const auto& a : atoms)
            if (uniform(gen, 0, 1))
                l.insert(a);
        return l;
    };
    lasso_word w;
    const std::size_t stem = uniform(gen, 0, max_stem);
    const std::size_t loop = uniform(gen, 1, std::max<std::size_t>(1, max_loop));
    for (std::size_t i = 0; i < stem; ++i)
        w.stem.push_back(letter());
    for (std::size_t i = 0; i < loop; ++i)
        w.loop.push_back(letter());
    return w;
}

std::vector<atom> atom_universe(std::size_t aps, std::size_t systems)
{
    std::vector<atom> out;
    for (std::size_t s = 0; s < systems; ++s)
        for (std::size_t a = 0; a < aps; ++a)
            out.push_back(atom{std::string(1, static_cast<char>('a' + a)), std::string(1, static_cast<char>('A' + s))});
    return out;
}

hyper_problem random_problem(rng& gen, const problem_bounds& bounds)
{
    const std::size_t universal = uniform(gen, bounds.min_universal, std::max(bounds.min_universal, bounds.universal));
    const std::size_t total = universal + bounds.existential;
    std::vector<quantified_system> systems;
    for (std::size_t s = 0; s < total; ++s) {
        const std::size_t n = uniform(gen, 1, std::max<std::size_t>(1, bounds.max_states));
        std::vector<transition_system::state> states;
        for (state_id id = 0; id < n; ++id) {
            transition_system::state st;
            st.id = id;
            for (std::size_t a = 0; a < bounds.aps; ++a)
                if (uniform(gen, 0, 1))
                    st.labels.insert(std::string(1, static_cast<char>('a' + a)));
            const std::size_t degree = uniform(gen, 1, std::min<std::size_t>(n, 2));
            for (std::size_t d = 0; d < degree; ++d)
                st.successors.push_back(static_cast<state_id>(uniform(gen, 0, n - 1)));
            states.push_back(std::move(st));
        }
        systems.push_back({transition_system(std::string(1, static_cast<char>('A' + s)), 0, std::move(states)),
                           s < universal ? quantifier::forall : quantifier::exists});
    }
    const auto all_atoms = atom_universe(bounds.aps, total);
    formula body = random_formula_upto(gen, bounds.max_body_size, all_atoms);
    std::vector<formula> prophecies;
    const auto universal_atoms = atom_universe(bounds.aps, universal);
    const std::size_t m = uniform(gen, 0, bounds.max_prophecies);
    for (std::size_t j = 0; j < m; ++j)
        prophecies.push_back(random_formula_upto(gen, bounds.max_prophecy_size, universal_atoms));
    return hyper_problem(std::move(systems), std::move(body), std::move(prophecies));
}

} // namespace hyperplay::cli
