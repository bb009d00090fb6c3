#include "hyperplay/automata/export.hpp"

#include <map>
#include <sstream>

namespace hyperplay::automata {

namespace {

std::string hoa_letter(const alphabet& ab, letter l)
{
    if (ab.size() == 0)
        return "t";
    std::string out;
    for (std::size_t i = 0; i < ab.size(); ++i) {
        if (i)
            out += '&';
        if (!(l >> i & 1))
            out += '!';
        out += std::to_string(i);
    }
    return out;
}

std::string hoa_cube(const alphabet& ab, const cube& c)
{
    std::string out;
    for (std::size_t i = 0; i < ab.size(); ++i) {
        const letter bit = letter{1} << i;
        if (!(c.pos & bit) && !(c.neg & bit))
            continue;
        if (!out.empty())
            out += '&';
        if (c.neg & bit)
            out += '!';
        out += std::to_string(i);
    }
    return out.empty() ? "t" : out;
}

void hoa_aps(std::ostringstream& os, const alphabet& ab)
{
    os << "AP: " << ab.size();
    for (const auto& v : ab.vars())
        os << " \"" << to_string(v) << '"';
    os << '\n';
}

std::string quoted(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + '"';
}

// Letters grouped by target so each DOT/HOA edge lists its letters once.
std::map<dpa_state, std::vector<letter>> grouped(const dpa& a, dpa_state q)
{
    std::map<dpa_state, std::vector<letter>> out;
    for (letter l = 0; l < a.num_letters(); ++l)
        out[a.step(q, l)].push_back(l);
    return out;
}

} // namespace

std::string to_hoa(const dpa& a)
{
    std::ostringstream os;
    const priority top = a.max_priority();
    os << "HOA: v1\n";
    os << "States: " << a.num_states() << '\n';
    os << "Start: " << a.initial() << '\n';
    hoa_aps(os, a.alphabet());
    os << "acc-name: parity max even " << top + 1 << '\n';
    os << "Acceptance: " << top + 1 << " parity-max-even\n";
    os << "properties: deterministic complete state-acc\n";
    os << "--BODY--\n";
    for (dpa_state q = 0; q < a.num_states(); ++q) {
        os << "State: " << q << ' ' << quoted(a.name(q)) << " {" << a.priority_of(q) << "}\n";
        for (const auto& [target, letters] : grouped(a, q)) {
            os << "  [";
            if (letters.size() == a.num_letters()) {
                os << 't';
            } else {
                for (std::size_t i = 0; i < letters.size(); ++i)
                    os << (i ? " | " : "") << hoa_letter(a.alphabet(), letters[i]);
            }
            os << "] " << target << '\n';
        }
    }
    os << "--END--\n";
    return os.str();
}

std::string to_hoa(const nba& a)
{
    std::ostringstream os;
    os << "HOA: v1\n";
    os << "States: " << a.num_states() << '\n';
    for (nba_state q : a.initial)
        os << "Start: " << q << '\n';
    hoa_aps(os, a.alphabet);
    os << "acc-name: Buchi\n";
    os << "Acceptance: 1 Inf(0)\n";
    os << "properties: state-acc\n";
    os << "--BODY--\n";
    for (nba_state q = 0; q < a.num_states(); ++q) {
        os << "State: " << q << ' ' << quoted(a.names[q]);
        if (a.accepting[q])
            os << " {0}";
        os << '\n';
        for (const auto& e : a.out[q])
            os << "  [" << hoa_cube(a.alphabet, e.guard) << "] " << e.target << '\n';
    }
    os << "--END--\n";
    return os.str();
}

std::string to_dot(const dpa& a)
{
    std::ostringstream os;
    os << "digraph dpa {\n  rankdir=LR;\n  init [shape=point];\n";
    os << "  init -> q" << a.initial() << ";\n";
    for (dpa_state q = 0; q < a.num_states(); ++q) {
        os << "  q" << q << " [label=" << quoted(std::to_string(q) + " / " + std::to_string(a.priority_of(q)))
           << ", tooltip=" << quoted(a.name(q)) << (a.priority_of(q) % 2 == 0 ? ", peripheries=2" : "") << "];\n";
    }
    for (dpa_state q = 0; q < a.num_states(); ++q) {
        for (const auto& [target, letters] : grouped(a, q)) {
            std::string label;
            if (letters.size() == a.num_letters()) {
                label = "true";
            } else {
                for (std::size_t i = 0; i < letters.size(); ++i)
                    label += (i ? "\\n" : "") + a.alphabet().describe(letters[i]);
            }
            os << "  q" << q << " -> q" << target << " [label=\"" << label << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

std::string to_dot(const nba& a)
{
    std::ostringstream os;
    os << "digraph nba {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < a.initial.size(); ++i)
        os << "  init" << i << " [shape=point];\n  init" << i << " -> q" << a.initial[i] << ";\n";
    for (nba_state q = 0; q < a.num_states(); ++q)
        os << "  q" << q << " [label=" << quoted(std::to_string(q)) << ", tooltip=" << quoted(a.names[q])
           << (a.accepting[q] ? ", peripheries=2" : "") << "];\n";
    for (nba_state q = 0; q < a.num_states(); ++q)
        for (const auto& e : a.out[q])
            os << "  q" << q << " -> q" << e.target << " [label=" << quoted(describe(a.alphabet, e.guard)) << "];\n";
    os << "}\n";
    return os.str();
}

} // namespace hyperplay::automata
