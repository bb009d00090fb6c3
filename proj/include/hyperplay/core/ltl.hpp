#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace hyperplay {

// An atomic proposition read on one system's trace, written `ap_System`.
// Prophecy variables are atoms with an empty system name (`p1`, `p2`, ...).
struct atom
{
    std::string ap;
    std::string system;

    [[nodiscard]] bool is_prophecy() const noexcept { return system.empty(); }

    friend auto operator<=>(const atom&, const atom&) = default;
    friend bool operator==(const atom&, const atom&) = default;
};

// 1-based, matching how prophecies are numbered in scripts and the UI.
atom prophecy_variable(std::size_t index);

std::string to_string(const atom& a);

enum class op : std::uint8_t {
    constant_true,
    constant_false,
    atomic,
    negation,
    conjunction,
    disjunction,
    implication,
    equivalence,
    next,
    until,
    release,
    eventually,
    globally,
};

[[nodiscard]] bool is_unary(op kind) noexcept;
[[nodiscard]] bool is_binary(op kind) noexcept;

namespace detail {
struct formula_node;
}

// Immutable LTL syntax tree with value semantics; copies share structure.
class formula
{
public:
    formula();  // `true`

    [[nodiscard]] op kind() const noexcept;
    // Valid for op::atomic only.
    [[nodiscard]] const atom& get_atom() const;
    // Operand of a unary node, left operand of a binary node.
    [[nodiscard]] const formula& lhs() const;
    [[nodiscard]] const formula& rhs() const;
    // Number of syntax-tree nodes.
    [[nodiscard]] std::size_t size() const noexcept;

    friend bool operator==(const formula& a, const formula& b) noexcept;
    friend std::strong_ordering operator<=>(const formula& a, const formula& b) noexcept;

    static formula make_true();
    static formula make_false();
    static formula make_atom(atom a);
    static formula make_unary(op kind, formula operand);
    static formula make_binary(op kind, formula lhs, formula rhs);

private:
    explicit formula(std::shared_ptr<const detail::formula_node> node);
    std::shared_ptr<const detail::formula_node> node_;
};

formula tt();
formula ff();
formula var(std::string ap, std::string system);
formula operator!(formula f);
formula operator&&(formula a, formula b);
formula operator||(formula a, formula b);
formula implies(formula a, formula b);
formula iff(formula a, formula b);
formula X(formula f);
formula F(formula f);
formula G(formula f);
formula U(formula a, formula b);
formula R(formula a, formula b);

// Pretty-printer emitting the ASCII grammar with the fewest parentheses that
// still parse back to the identical tree.
std::string to_string(const formula& f);

// Grammar: atoms `ap_Sys` (split at the last underscore), `true`, `false`,
// `!`, `&`, `|`, `->`, `<->`, `X`, `F`, `G`, `U`, `R` and parentheses.
// Precedence from tightest: unary, U/R (right-assoc), &, |, ->/<-> (right-assoc).
// Throws hyperplay::error (syntax, empty_input, unknown_system).
formula parse_ltl(std::string_view text, const std::set<std::string>& known_systems);

// Rewrites into {true, false, atom, !, &, X, U}.
formula to_core(const formula& f);
// Negation normal form over {true, false, atom, !atom, &, |, X, U, R}.
formula to_nnf(const formula& f);
[[nodiscard]] bool is_nnf(const formula& f);

void collect_atoms(const formula& f, std::set<atom>& out);
std::set<atom> atoms_of(const formula& f);
std::set<std::string> systems_of(const formula& f);

} // namespace hyperplay
