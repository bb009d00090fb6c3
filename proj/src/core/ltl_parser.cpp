#include "hyperplay/core/error.hpp"
#include "hyperplay/core/ltl.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace hyperplay {

namespace {

enum class tok : std::uint8_t { ident, lparen, rparen, bang, amp, bar, arrow, darrow, end };

struct token
{
    tok kind;
    std::string_view text;
    std::size_t pos;
};

bool ident_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<token> tokenize(std::string_view s)
{
    std::vector<token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (ident_char(c)) {
            std::size_t j = i;
            while (j < s.size() && ident_char(s[j]))
                ++j;
            out.push_back({tok::ident, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        switch (c) {
        case '(': out.push_back({tok::lparen, s.substr(i, 1), i}); ++i; continue;
        case ')': out.push_back({tok::rparen, s.substr(i, 1), i}); ++i; continue;
        case '!': out.push_back({tok::bang, s.substr(i, 1), i}); ++i; continue;
        case '&': out.push_back({tok::amp, s.substr(i, 1), i}); ++i; continue;
        case '|': out.push_back({tok::bar, s.substr(i, 1), i}); ++i; continue;
        case '-':
            if (s.substr(i, 2) == "->") {
                out.push_back({tok::arrow, s.substr(i, 2), i});
                i += 2;
                continue;
            }
            break;
        case '<':
            if (s.substr(i, 3) == "<->") {
                out.push_back({tok::darrow, s.substr(i, 3), i});
                i += 3;
                continue;
            }
            break;
        default:
            break;
        }
        throw error(errc::syntax, "unexpected character '" + std::string(1, c) + "'", i);
    }
    out.push_back({tok::end, {}, s.size()});
    return out;
}

class parser
{
public:
    parser(std::vector<token> tokens, const std::set<std::string>& systems)
        : toks_(std::move(tokens)), systems_(systems)
    {
    }

    formula parse()
    {
        formula f = parse_equiv();
        if (peek().kind != tok::end)
            fail("unexpected '" + std::string(peek().text) + "'");
        return f;
    }

private:
    const token& peek() const { return toks_[i_]; }
    const token& take() { return toks_[i_++]; }

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw error(errc::syntax, msg, peek().pos);
    }

    bool is_keyword(std::string_view kw) const
    {
        return peek().kind == tok::ident && peek().text == kw;
    }

    formula parse_equiv()
    {
        formula lhs = parse_or();
        if (peek().kind == tok::arrow) {
            take();
            return implies(std::move(lhs), parse_equiv());
        }
        if (peek().kind == tok::darrow) {
            take();
            return iff(std::move(lhs), parse_equiv());
        }
        return lhs;
    }

    formula parse_or()
    {
        formula lhs = parse_and();
        while (peek().kind == tok::bar) {
            take();
            lhs = std::move(lhs) || parse_and();
        }
        return lhs;
    }

    formula parse_and()
    {
        formula lhs = parse_until();
        while (peek().kind == tok::amp) {
            take();
            lhs = std::move(lhs) && parse_until();
        }
        return lhs;
    }

    formula parse_until()
    {
        formula lhs = parse_unary();
        if (is_keyword("U")) {
            take();
            return U(std::move(lhs), parse_until());
        }
        if (is_keyword("R")) {
            take();
            return R(std::move(lhs), parse_until());
        }
        return lhs;
    }

    formula parse_unary()
    {
        if (peek().kind == tok::bang) {
            take();
            return !parse_unary();
        }
        if (is_keyword("X")) {
            take();
            return X(parse_unary());
        }
        if (is_keyword("F")) {
            take();
            return F(parse_unary());
        }
        if (is_keyword("G")) {
            take();
            return G(parse_unary());
        }
        return parse_primary();
    }

    formula parse_primary()
    {
        const token& t = peek();
        switch (t.kind) {
        case tok::lparen: {
            take();
            formula f = parse_equiv();
            if (peek().kind != tok::rparen)
                fail("expected ')'");
            take();
            return f;
        }
        case tok::ident:
            break;
        case tok::end:
            fail("unexpected end of formula");
        default:
            fail("unexpected '" + std::string(t.text) + "'");
        }
        if (t.text == "true") {
            take();
            return tt();
        }
        if (t.text == "false") {
            take();
            return ff();
        }
        if (t.text == "U" || t.text == "R")
            fail("binary operator '" + std::string(t.text) + "' is missing its left operand");
        const auto split = t.text.rfind('_');
        if (split == std::string_view::npos)
            fail("atom '" + std::string(t.text) + "' must have the form ap_System");
        const std::string_view ap = t.text.substr(0, split);
        const std::string_view sys = t.text.substr(split + 1);
        if (ap.empty() || sys.empty())
            fail("atom '" + std::string(t.text) + "' must have the form ap_System");
        if (ap.find('_') != std::string_view::npos)
            fail("AP name '" + std::string(ap) + "' must not contain '_'");
        if (!systems_.contains(std::string(sys)))
            throw error(errc::unknown_system, "unknown system '" + std::string(sys) + "' in atom '" + std::string(t.text) + "'",
                        t.pos + split + 1);
        take();
        return var(std::string(ap), std::string(sys));
    }

    std::vector<token> toks_;
    const std::set<std::string>& systems_;
    std::size_t i_ = 0;
};

} // namespace

formula parse_ltl(std::string_view text, const std::set<std::string>& known_systems)
{
    bool blank = true;
    for (char c : text)
        blank = blank && std::isspace(static_cast<unsigned char>(c));
    if (blank)
        throw error(errc::empty_input, "empty formula", 0);
    return parser(tokenize(text), known_systems).parse();
}

} // namespace hyperplay
