#include "hyperplay/core/ltl.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace hyperplay {

namespace detail {

struct formula_node
{
    op kind = op::constant_true;
    atom a;
    formula lhs;
    formula rhs;
    std::size_t size = 1;
};

} // namespace detail

namespace {

std::strong_ordering compare(const formula& a, const formula& b) noexcept
{
    if (auto c = a.kind() <=> b.kind(); c != 0)
        return c;
    switch (a.kind()) {
    case op::constant_true:
    case op::constant_false:
        return std::strong_ordering::equal;
    case op::atomic:
        return a.get_atom() <=> b.get_atom();
    default:
        break;
    }
    if (auto c = compare(a.lhs(), b.lhs()); c != 0)
        return c;
    if (is_binary(a.kind()))
        return compare(a.rhs(), b.rhs());
    return std::strong_ordering::equal;
}

} // namespace

atom prophecy_variable(std::size_t index)
{
    return atom{"p" + std::to_string(index), ""};
}

std::string to_string(const atom& a)
{
    if (a.is_prophecy())
        return a.ap;
    return a.ap + "_" + a.system;
}

bool is_unary(op kind) noexcept
{
    switch (kind) {
    case op::negation:
    case op::next:
    case op::eventually:
    case op::globally:
        return true;
    default:
        return false;
    }
}

bool is_binary(op kind) noexcept
{
    switch (kind) {
    case op::conjunction:
    case op::disjunction:
    case op::implication:
    case op::equivalence:
    case op::until:
    case op::release:
        return true;
    default:
        return false;
    }
}

// A null node stands for `true`, so default-constructed children are cheap.
formula::formula() = default;

formula::formula(std::shared_ptr<const detail::formula_node> node) : node_(std::move(node)) {}

op formula::kind() const noexcept { return node_ ? node_->kind : op::constant_true; }

const atom& formula::get_atom() const
{
    if (kind() != op::atomic)
        throw std::logic_error("formula::get_atom on a non-atomic formula");
    return node_->a;
}

const formula& formula::lhs() const
{
    if (!is_unary(kind()) && !is_binary(kind()))
        throw std::logic_error("formula::lhs on a leaf");
    return node_->lhs;
}

const formula& formula::rhs() const
{
    if (!is_binary(kind()))
        throw std::logic_error("formula::rhs on a non-binary formula");
    return node_->rhs;
}

std::size_t formula::size() const noexcept { return node_ ? node_->size : 1; }

bool operator==(const formula& a, const formula& b) noexcept
{
    return a.node_ == b.node_ || compare(a, b) == 0;
}

std::strong_ordering operator<=>(const formula& a, const formula& b) noexcept
{
    if (a.node_ == b.node_)
        return std::strong_ordering::equal;
    return compare(a, b);
}

formula formula::make_true() { return formula(); }

formula formula::make_false()
{
    auto n = std::make_shared<detail::formula_node>();
    n->kind = op::constant_false;
    return formula(std::move(n));
}

formula formula::make_atom(atom a)
{
    auto n = std::make_shared<detail::formula_node>();
    n->kind = op::atomic;
    n->a = std::move(a);
    return formula(std::move(n));
}

formula formula::make_unary(op kind, formula operand)
{
    assert(is_unary(kind));
    auto n = std::make_shared<detail::formula_node>();
    n->kind = kind;
    n->size = 1 + operand.size();
    n->lhs = std::move(operand);
    return formula(std::move(n));
}

formula formula::make_binary(op kind, formula lhs, formula rhs)
{
    assert(is_binary(kind));
    auto n = std::make_shared<detail::formula_node>();
    n->kind = kind;
    n->size = 1 + lhs.size() + rhs.size();
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return formula(std::move(n));
}

formula tt() { return formula::make_true(); }
formula ff() { return formula::make_false(); }
formula var(std::string ap, std::string system) { return formula::make_atom(atom{std::move(ap), std::move(system)}); }
formula operator!(formula f) { return formula::make_unary(op::negation, std::move(f)); }
formula operator&&(formula a, formula b) { return formula::make_binary(op::conjunction, std::move(a), std::move(b)); }
formula operator||(formula a, formula b) { return formula::make_binary(op::disjunction, std::move(a), std::move(b)); }
formula implies(formula a, formula b) { return formula::make_binary(op::implication, std::move(a), std::move(b)); }
formula iff(formula a, formula b) { return formula::make_binary(op::equivalence, std::move(a), std::move(b)); }
formula X(formula f) { return formula::make_unary(op::next, std::move(f)); }
formula F(formula f) { return formula::make_unary(op::eventually, std::move(f)); }
formula G(formula f) { return formula::make_unary(op::globally, std::move(f)); }
formula U(formula a, formula b) { return formula::make_binary(op::until, std::move(a), std::move(b)); }
formula R(formula a, formula b) { return formula::make_binary(op::release, std::move(a), std::move(b)); }

// ---------------------------------------------------------------------------
// printing

namespace {

int level(op kind)
{
    switch (kind) {
    case op::implication:
    case op::equivalence:
        return 1;
    case op::disjunction:
        return 2;
    case op::conjunction:
        return 3;
    case op::until:
    case op::release:
        return 4;
    case op::negation:
    case op::next:
    case op::eventually:
    case op::globally:
        return 5;
    default:
        return 6;
    }
}

bool right_assoc(op kind)
{
    return kind == op::implication || kind == op::equivalence || kind == op::until || kind == op::release;
}

const char* symbol(op kind)
{
    switch (kind) {
    case op::negation: return "!";
    case op::next: return "X";
    case op::eventually: return "F";
    case op::globally: return "G";
    case op::conjunction: return "&";
    case op::disjunction: return "|";
    case op::implication: return "->";
    case op::equivalence: return "<->";
    case op::until: return "U";
    case op::release: return "R";
    default: return "?";
    }
}

void print(const formula& f, std::string& out);

void print_child(const formula& child, bool parens, std::string& out)
{
    if (parens)
        out += '(';
    print(child, out);
    if (parens)
        out += ')';
}

void print(const formula& f, std::string& out)
{
    const op k = f.kind();
    switch (k) {
    case op::constant_true:
        out += "true";
        return;
    case op::constant_false:
        out += "false";
        return;
    case op::atomic:
        out += to_string(f.get_atom());
        return;
    default:
        break;
    }
    const int lv = level(k);
    if (is_unary(k)) {
        out += symbol(k);
        if (k != op::negation)
            out += ' ';
        print_child(f.lhs(), level(f.lhs().kind()) < lv, out);
        return;
    }
    const int l = level(f.lhs().kind());
    const int r = level(f.rhs().kind());
    const bool ra = right_assoc(k);
    print_child(f.lhs(), ra ? l <= lv : l < lv, out);
    out += ' ';
    out += symbol(k);
    out += ' ';
    print_child(f.rhs(), ra ? r < lv : r <= lv, out);
}

} // namespace

std::string to_string(const formula& f)
{
    std::string out;
    print(f, out);
    return out;
}

// ---------------------------------------------------------------------------
// normal forms

formula to_core(const formula& f)
{
    switch (f.kind()) {
    case op::constant_true:
    case op::constant_false:
    case op::atomic:
        return f;
    case op::negation:
        return !to_core(f.lhs());
    case op::next:
        return X(to_core(f.lhs()));
    case op::eventually:
        return U(tt(), to_core(f.lhs()));
    case op::globally:
        return !U(tt(), !to_core(f.lhs()));
    case op::conjunction:
        return to_core(f.lhs()) && to_core(f.rhs());
    case op::disjunction:
        return !(!to_core(f.lhs()) && !to_core(f.rhs()));
    case op::implication:
        return !(to_core(f.lhs()) && !to_core(f.rhs()));
    case op::equivalence: {
        const formula a = to_core(f.lhs());
        const formula b = to_core(f.rhs());
        return !(a && !b) && !(b && !a);
    }
    case op::until:
        return U(to_core(f.lhs()), to_core(f.rhs()));
    case op::release:
        return !U(!to_core(f.lhs()), !to_core(f.rhs()));
    }
    return f;
}

namespace {

formula nnf(const formula& f, bool negated)
{
    switch (f.kind()) {
    case op::constant_true:
        return negated ? ff() : tt();
    case op::constant_false:
        return negated ? tt() : ff();
    case op::atomic:
        return negated ? !f : f;
    case op::negation:
        return nnf(f.lhs(), !negated);
    case op::next:
        return X(nnf(f.lhs(), negated));
    case op::eventually:
        return negated ? R(ff(), nnf(f.lhs(), true)) : U(tt(), nnf(f.lhs(), false));
    case op::globally:
        return negated ? U(tt(), nnf(f.lhs(), true)) : R(ff(), nnf(f.lhs(), false));
    case op::conjunction:
        return negated ? nnf(f.lhs(), true) || nnf(f.rhs(), true) : nnf(f.lhs(), false) && nnf(f.rhs(), false);
    case op::disjunction:
        return negated ? nnf(f.lhs(), true) && nnf(f.rhs(), true) : nnf(f.lhs(), false) || nnf(f.rhs(), false);
    case op::implication:
        return negated ? nnf(f.lhs(), false) && nnf(f.rhs(), true) : nnf(f.lhs(), true) || nnf(f.rhs(), false);
    case op::equivalence: {
        // a <-> b  ==  (a & b) | (!a & !b);  !(a <-> b)  ==  (a & !b) | (!a & b)
        const formula pa = nnf(f.lhs(), false);
        const formula na = nnf(f.lhs(), true);
        const formula pb = nnf(f.rhs(), false);
        const formula nb = nnf(f.rhs(), true);
        return negated ? (pa && nb) || (na && pb) : (pa && pb) || (na && nb);
    }
    case op::until:
        return negated ? R(nnf(f.lhs(), true), nnf(f.rhs(), true)) : U(nnf(f.lhs(), false), nnf(f.rhs(), false));
    case op::release:
        return negated ? U(nnf(f.lhs(), true), nnf(f.rhs(), true)) : R(nnf(f.lhs(), false), nnf(f.rhs(), false));
    }
    return f;
}

} // namespace

formula to_nnf(const formula& f) { return nnf(f, false); }

bool is_nnf(const formula& f)
{
    switch (f.kind()) {
    case op::constant_true:
    case op::constant_false:
    case op::atomic:
        return true;
    case op::negation:
        return f.lhs().kind() == op::atomic;
    case op::next:
        return is_nnf(f.lhs());
    case op::conjunction:
    case op::disjunction:
    case op::until:
    case op::release:
        return is_nnf(f.lhs()) && is_nnf(f.rhs());
    default:
        return false;
    }
}

void collect_atoms(const formula& f, std::set<atom>& out)
{
    if (f.kind() == op::atomic) {
        out.insert(f.get_atom());
        return;
    }
    if (is_unary(f.kind()) || is_binary(f.kind()))
        collect_atoms(f.lhs(), out);
    if (is_binary(f.kind()))
        collect_atoms(f.rhs(), out);
}

std::set<atom> atoms_of(const formula& f)
{
    std::set<atom> out;
    collect_atoms(f, out);
    return out;
}

std::set<std::string> systems_of(const formula& f)
{
    std::set<std::string> out;
    for (const auto& a : atoms_of(f))
        if (!a.is_prophecy())
            out.insert(a.system);
    return out;
}

} // namespace hyperplay
