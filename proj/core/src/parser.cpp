#include "topoevid/parser.hpp"

#include <cctype>

namespace topoevid {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    Vocab& v;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool eat_str(const char* t) {
        skip_ws();
        std::size_t j = i, k = 0;
        while (t[k]) {
            if (j >= s.size() || s[j] != t[k]) return false;
            ++j, ++k;
        }
        i = j;
        return true;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", i);
    }
    std::string ident() {
        skip_ws();
        if (i >= s.size() || !std::islower(static_cast<unsigned char>(s[i])))
            throw ParseError("expected identifier", i);
        std::size_t b = i;
        while (i < s.size() && (std::islower(static_cast<unsigned char>(s[i])) ||
                                std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '_'))
            ++i;
        return s.substr(b, i - b);
    }

    Group group() {
        expect('{');
        skip_ws();
        if (i < s.size() && s[i] == 'A') {
            ++i;
            expect('}');
            return Group{true, 0};
        }
        Group g{false, 0};
        for (;;) {
            int id = v.agent_id(ident());
            g.mask |= AgentSet{1} << id;
            if (eat(',')) continue;
            expect('}');
            return g;
        }
    }

    Group alpha() {
        std::size_t at = i;
        Group g = group();
        if (!group_is_alpha(g)) throw ParseError("K/B take a single agent or {A}", at);
        return g;
    }

    FormulaPtr formula() { return iff(); }

    FormulaPtr iff() {
        FormulaPtr a = imp();
        while (eat_str("<->")) a = Formula::mk_iff(a, imp());
        return a;
    }

    FormulaPtr imp() {
        FormulaPtr a = disj();
        skip_ws();
        if (i + 1 < s.size() && s[i] == '-' && s[i + 1] == '>') {
            i += 2;
            return Formula::mk_implies(a, imp());
        }
        return a;
    }

    FormulaPtr disj() {
        FormulaPtr a = conj();
        while (true) {
            skip_ws();
            if (i < s.size() && s[i] == '|') {
                ++i;
                a = Formula::mk_or(a, conj());
            } else
                break;
        }
        return a;
    }

    FormulaPtr conj() {
        FormulaPtr a = unary();
        while (eat('&')) a = Formula::mk_and(a, unary());
        return a;
    }

    FormulaPtr unary() {
        skip_ws();
        if (eat('~')) return Formula::mk_not(unary());
        if (eat_str("Box")) {
            Group g = group();
            return Formula::mk_box(g, unary());
        }
        if (eat_str("Dia")) {
            Group g = group();
            return Formula::mk_dia(g, unary());
        }
        if (eat_str("Forall")) {
            Group g = group();
            return Formula::mk_forall(g, unary());
        }
        if (eat_str("Exists")) {
            Group g = group();
            return Formula::mk_exists(g, unary());
        }
        if (eat('[')) {
            if (!eat_str("share")) throw ParseError("expected 'share'", i);
            Group g = group();
            expect(']');
            return Formula::mk_share(g, unary());
        }
        if (eat('<')) {
            if (eat('K')) {
                Group g = alpha();
                expect('>');
                return Formula::mk_pos_know(g, unary());
            }
            if (eat('B')) {
                Group g = alpha();
                expect('>');
                return Formula::mk_pos_believe(g, unary());
            }
            throw ParseError("expected <K...> or <B...>", i);
        }
        if (i < s.size() && s[i] == 'K') {
            ++i;
            Group g = alpha();
            return Formula::mk_know(g, unary());
        }
        if (i < s.size() && s[i] == 'B') {
            ++i;
            Group g = alpha();
            return Formula::mk_believe(g, unary());
        }
        if (eat('(')) {
            FormulaPtr a = formula();
            expect(')');
            return a;
        }
        std::size_t at = i;
        std::string name = ident();
        (void)at;
        return Formula::mk_atom(v.atom_id(name));
    }
};

}  // namespace

FormulaPtr parse_formula(const std::string& text, Vocab& v) {
    Cursor c{text, 0, v};
    FormulaPtr f = c.formula();
    if (!c.eof()) throw ParseError("trailing input", c.i);
    return f;
}

Group parse_group(const std::string& text, Vocab& v) {
    std::string t = text;
    if (t.empty()) throw ParseError("empty group", 0);
    if (t.front() != '{') t = "{" + t + "}";
    Cursor c{t, 0, v};
    Group g = c.group();
    if (!c.eof()) throw ParseError("trailing input", c.i);
    return g;
}

}  // namespace topoevid
