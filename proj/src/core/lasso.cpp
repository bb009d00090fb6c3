#include "hyperplay/core/lasso.hpp"

#include <stdexcept>

namespace hyperplay {

std::string to_string(const lasso_word& word)
{
    auto letters = [](const std::vector<letter_set>& seq) {
        std::string out = "[";
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (i)
                out += ", ";
            out += '{';
            bool first = true;
            for (const auto& a : seq[i]) {
                if (!first)
                    out += ',';
                first = false;
                out += to_string(a);
            }
            out += '}';
        }
        return out + "]";
    };
    return "stem=" + letters(word.stem) + " loop=" + letters(word.loop);
}

namespace {

using values = std::vector<char>;

template <class Step>
values fixpoint(const lasso_word& w, bool initial, Step step)
{
    values v(w.length(), initial ? 1 : 0);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t k = w.length(); k-- > 0;) {
            const char nv = step(k, v[w.next(k)]) ? 1 : 0;
            if (nv != v[k]) {
                v[k] = nv;
                changed = true;
            }
        }
    }
    return v;
}

values eval(const formula& f, const lasso_word& w)
{
    const std::size_t n = w.length();
    switch (f.kind()) {
    case op::constant_true:
        return values(n, 1);
    case op::constant_false:
        return values(n, 0);
    case op::atomic: {
        values v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = w.at(i).contains(f.get_atom()) ? 1 : 0;
        return v;
    }
    case op::negation: {
        values v = eval(f.lhs(), w);
        for (auto& x : v)
            x = !x;
        return v;
    }
    case op::next: {
        const values a = eval(f.lhs(), w);
        values v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = a[w.next(i)];
        return v;
    }
    case op::eventually: {
        const values a = eval(f.lhs(), w);
        return fixpoint(w, false, [&](std::size_t i, bool nxt) { return a[i] || nxt; });
    }
    case op::globally: {
        const values a = eval(f.lhs(), w);
        return fixpoint(w, true, [&](std::size_t i, bool nxt) { return a[i] && nxt; });
    }
    default:
        break;
    }
    const values a = eval(f.lhs(), w);
    const values b = eval(f.rhs(), w);
    values v(n);
    switch (f.kind()) {
    case op::conjunction:
        for (std::size_t i = 0; i < n; ++i)
            v[i] = a[i] && b[i];
        return v;
    case op::disjunction:
        for (std::size_t i = 0; i < n; ++i)
            v[i] = a[i] || b[i];
        return v;
    case op::implication:
        for (std::size_t i = 0; i < n; ++i)
            v[i] = !a[i] || b[i];
        return v;
    case op::equivalence:
        for (std::size_t i = 0; i < n; ++i)
            v[i] = (a[i] != 0) == (b[i] != 0);
        return v;
    case op::until:
        return fixpoint(w, false, [&](std::size_t i, bool nxt) { return b[i] || (a[i] && nxt); });
    case op::release:
        return fixpoint(w, true, [&](std::size_t i, bool nxt) { return b[i] && (a[i] || nxt); });
    default:
        throw std::logic_error("eval_ltl_on_lasso: unexpected operator");
    }
}

} // namespace

std::vector<bool> eval_ltl_positions(const formula& f, const lasso_word& word)
{
    if (word.loop.empty())
        throw std::invalid_argument("lasso loop must be non-empty");
    const values v = eval(f, word);
    return std::vector<bool>(v.begin(), v.end());
}

bool eval_ltl_on_lasso(const formula& f, const lasso_word& word)
{
    return eval_ltl_positions(f, word).front();
}

} // namespace hyperplay
