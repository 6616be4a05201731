#pragma once
#include <map>
#include <sstream>
#include <string>
#include <vector>
#include "ifunc.hpp"
#include "fracfield.hpp"
#include "pf.hpp"

namespace em {

// Textual toric spec, two rows of toric data plus the ring data:
//   line 1: charge integers          1 1 1 -3
//   line 2: weight expressions       0 0 nu -nu      (also 2*nu, mu/3, ...)
//   line 3: factored relation        p^2  |  p*(p+mu)
//   line 4: per-column regime flags  inf inf zero zero
// Lines starting with '#' are comments.

struct SpecTerm {
    Rat coef{0};
    std::string sym; // empty for constants
};

struct ParsedSpec {
    std::vector<long> charges;
    std::vector<SpecTerm> weights;
    struct RelFactor {
        SpecTerm shift; // the factor is (p + shift)
        int mult = 1;
    };
    std::vector<RelFactor> relation;
    std::vector<Regime> regimes;
    std::vector<std::string> symbols; // order of first appearance
    std::string relation_text;
};

namespace specdetail {

inline std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

inline bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!isdigit((unsigned char)c)) return false;
    return true;
}

// [+-]? ( digits | [digits *]? name [/ digits]? )
inline SpecTerm parse_term(std::string s, const std::string& field) {
    s = strip(s);
    SpecTerm t;
    t.coef = 1;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        if (s[0] == '-') t.coef = -1;
        s = strip(s.substr(1));
    }
    if (s.empty()) throw std::invalid_argument(field + ": empty term");
    size_t slash = s.find('/');
    std::string head = s.substr(0, slash == std::string::npos ? s.size() : slash);
    head = strip(head);
    size_t star = head.find('*');
    if (star != std::string::npos) {
        std::string c = strip(head.substr(0, star));
        if (!all_digits(c))
            throw std::invalid_argument(field + ": bad coefficient in '" + s + "'");
        t.coef *= rat_from_string(c);
        head = strip(head.substr(star + 1));
    }
    if (all_digits(head)) {
        t.coef *= rat_from_string(head);
    } else {
        for (char c : head)
            if (!isalnum((unsigned char)c) && c != '_')
                throw std::invalid_argument(field + ": bad symbol '" + head + "'");
        if (!isalpha((unsigned char)head[0]))
            throw std::invalid_argument(field + ": bad symbol '" + head + "'");
        t.sym = head;
    }
    if (slash != std::string::npos) {
        std::string den = strip(s.substr(slash + 1));
        if (!all_digits(den) || den == "0")
            throw std::invalid_argument(field + ": bad divisor in '" + s + "'");
        t.coef /= rat_from_string(den);
    }
    if (t.sym.empty() && !all_digits(head) && star == std::string::npos)
        throw std::invalid_argument(field + ": cannot parse '" + s + "'");
    return t;
}

// p | (p) | (p+term) | (p-term), optionally followed by ^int
inline ParsedSpec::RelFactor parse_factor(std::string s) {
    ParsedSpec::RelFactor f;
    s = strip(s);
    size_t caret = s.find('^');
    if (caret != std::string::npos) {
        std::string e = strip(s.substr(caret + 1));
        if (!all_digits(e)) throw std::invalid_argument("relation: bad exponent in '" + s + "'");
        f.mult = std::stoi(e);
        s = strip(s.substr(0, caret));
    }
    if (!s.empty() && s.front() == '(') {
        if (s.back() != ')') throw std::invalid_argument("relation: unbalanced parens in '" + s + "'");
        s = strip(s.substr(1, s.size() - 2));
    }
    if (s.empty() || s[0] != 'p')
        throw std::invalid_argument("relation: factor must start with p: '" + s + "'");
    std::string rest = strip(s.substr(1));
    if (rest.empty()) {
        f.shift = SpecTerm{Rat(0), ""};
    } else {
        if (rest[0] != '+' && rest[0] != '-')
            throw std::invalid_argument("relation: cannot parse factor '" + s + "'");
        f.shift = parse_term(rest, "relation");
    }
    return f;
}

} // namespace specdetail

// bindings substitute rational values for named symbols before the free
// symbols are collected
inline ParsedSpec parse_spec(const std::string& text,
                             const std::map<std::string, Rat>& bindings = {}) {
    using namespace specdetail;
    std::istringstream in(text);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        line = strip(line);
        if (line.empty() || line[0] == '#') continue;
        lines.push_back(line);
    }
    if (lines.size() != 4)
        throw std::invalid_argument("spec: expected 4 lines (charges, weights, relation, regimes), got " +
                                    std::to_string(lines.size()));
    ParsedSpec ps;
    {
        std::istringstream ls(lines[0]);
        long v;
        while (ls >> v) ps.charges.push_back(v);
        if (!ls.eof()) throw std::invalid_argument("charges: expected integers");
    }
    {
        std::istringstream ls(lines[1]);
        std::string tok;
        while (ls >> tok) ps.weights.push_back(parse_term(tok, "weights"));
    }
    {
        ps.relation_text = lines[2];
        // split on top-level '*' (factors contain no nested products)
        std::string cur;
        int depth = 0;
        for (char c : lines[2]) {
            if (c == '(') depth++;
            if (c == ')') depth--;
            if (c == '*' && depth == 0) {
                ps.relation.push_back(parse_factor(cur));
                cur.clear();
            } else cur += c;
        }
        ps.relation.push_back(parse_factor(cur));
    }
    {
        std::istringstream ls(lines[3]);
        std::string tok;
        while (ls >> tok) {
            if (tok == "inf") ps.regimes.push_back(Regime::HInf);
            else if (tok == "zero") ps.regimes.push_back(Regime::HZero);
            else throw std::invalid_argument("regimes: expected 'inf' or 'zero', got '" + tok + "'");
        }
    }
    if (ps.weights.size() != ps.charges.size())
        throw std::invalid_argument("weights: column count differs from charges");
    if (ps.regimes.size() != ps.charges.size())
        throw std::invalid_argument("regimes: column count differs from charges");

    auto bind = [&](SpecTerm& t) {
        if (t.sym.empty()) return;
        auto it = bindings.find(t.sym);
        if (it != bindings.end()) {
            t.coef *= it->second;
            t.sym.clear();
        }
    };
    for (auto& w : ps.weights) bind(w);
    for (auto& f : ps.relation) bind(f.shift);

    auto note = [&](const SpecTerm& t) {
        if (t.sym.empty()) return;
        for (auto& s : ps.symbols)
            if (s == t.sym) return;
        ps.symbols.push_back(t.sym);
    };
    for (auto& w : ps.weights) note(w);
    for (auto& f : ps.relation) note(f.shift);
    if (ps.symbols.size() > 2)
        throw std::invalid_argument("spec: at most 2 free symbols supported, got " +
                                    std::to_string(ps.symbols.size()));
    return ps;
}

// Value of a term in the coefficient field K given the symbol table.
template <class K>
K term_value(const SpecTerm& t, const std::map<std::string, K>& symval) {
    K c = K(0);
    {   // K(Rat) is not a constructor for RatFunc towers; build via num/den
        c = K(t.coef.get_num().get_si());
        long d = t.coef.get_den().get_si();
        if (d != 1) c = c / K(d);
    }
    if (t.sym.empty()) return c;
    auto it = symval.find(t.sym);
    if (it == symval.end())
        throw std::invalid_argument("unbound symbol '" + t.sym + "'");
    return c * it->second;
}

template <class K>
std::map<std::string, K> symbol_table(const std::vector<std::string>& symbols);

template <>
inline std::map<std::string, Rat> symbol_table<Rat>(const std::vector<std::string>& symbols) {
    if (!symbols.empty())
        throw std::invalid_argument("spec has free symbols; bind them or use a parameter field");
    return {};
}

template <>
inline std::map<std::string, QF1> symbol_table<QF1>(const std::vector<std::string>& symbols) {
    if (symbols.size() > 1)
        throw std::invalid_argument("expected at most 1 free symbol");
    std::map<std::string, QF1> t;
    if (!symbols.empty()) t.emplace(symbols[0], QF1::var());
    return t;
}

template <>
inline std::map<std::string, QF2> symbol_table<QF2>(const std::vector<std::string>& symbols) {
    std::map<std::string, QF2> t;
    if (symbols.size() >= 1) t.emplace(symbols[0], QF2(QF1::var()));
    if (symbols.size() == 2) t.emplace(symbols[1], QF2::var());
    return t;
}

template <class K>
ToricSpec<K> make_spec(const ParsedSpec& ps, const std::map<std::string, K>& symval) {
    ToricSpec<K> s;
    s.charges = ps.charges;
    for (auto& w : ps.weights) s.weights.push_back(term_value(w, symval));
    s.regimes = ps.regimes;
    s.relation = ps.relation_text;
    s.validate();
    return s;
}

template <class K>
QuotientRing<K> make_ring(const ParsedSpec& ps, const std::map<std::string, K>& symval) {
    QuotientRing<K> r;
    for (auto& f : ps.relation) {
        r.roots.push_back(K(0) - term_value(f.shift, symval));
        r.mults.push_back(f.mult);
    }
    r.validate();
    return r;
}

} // namespace em
