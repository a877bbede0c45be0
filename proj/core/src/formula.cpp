#include "topoevid/formula.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace topoevid {

AgentSet group_mask(const Group& g, int nAgents) {
    if (nAgents < 1 || nAgents > kMaxAgents) throw std::invalid_argument("agent universe out of range");
    AgentSet all = AgentSet((1u << nAgents) - 1);
    if (g.full) return all;
    if (g.mask == 0) throw std::invalid_argument("empty group");
    if (g.mask & ~all) throw std::invalid_argument("group member outside agent universe");
    return g.mask;
}

bool group_is_alpha(const Group& g) {
    return g.full || __builtin_popcount(g.mask) == 1;
}

namespace {
FormulaPtr node(Kind k, int atom, Group g, FormulaPtr a, FormulaPtr b) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    f->atom = atom;
    f->grp = g;
    f->lhs = std::move(a);
    f->rhs = std::move(b);
    return f;
}
void check_group(const Group& g) {
    if (!g.full && g.mask == 0) throw std::invalid_argument("empty group");
}
}  // namespace

FormulaPtr Formula::mk_atom(int id) {
    if (id < 0) throw std::invalid_argument("bad atom id");
    return node(Kind::Atom, id, {}, nullptr, nullptr);
}
FormulaPtr Formula::mk_not(FormulaPtr f) { return node(Kind::Not, -1, {}, std::move(f), nullptr); }
FormulaPtr Formula::mk_and(FormulaPtr a, FormulaPtr b) {
    return node(Kind::And, -1, {}, std::move(a), std::move(b));
}
FormulaPtr Formula::mk_box(Group g, FormulaPtr f) {
    check_group(g);
    return node(Kind::Box, -1, g, std::move(f), nullptr);
}
FormulaPtr Formula::mk_forall(Group g, FormulaPtr f) {
    check_group(g);
    return node(Kind::Forall, -1, g, std::move(f), nullptr);
}
FormulaPtr Formula::mk_know(Group g, FormulaPtr f) {
    check_group(g);
    return node(Kind::Know, -1, g, std::move(f), nullptr);
}
FormulaPtr Formula::mk_believe(Group g, FormulaPtr f) {
    check_group(g);
    return node(Kind::Believe, -1, g, std::move(f), nullptr);
}
FormulaPtr Formula::mk_share(Group g, FormulaPtr f) {
    check_group(g);
    return node(Kind::Share, -1, g, std::move(f), nullptr);
}

FormulaPtr Formula::mk_or(FormulaPtr a, FormulaPtr b) {
    return mk_not(mk_and(mk_not(std::move(a)), mk_not(std::move(b))));
}
FormulaPtr Formula::mk_implies(FormulaPtr a, FormulaPtr b) {
    return mk_not(mk_and(std::move(a), mk_not(std::move(b))));
}
FormulaPtr Formula::mk_iff(FormulaPtr a, FormulaPtr b) {
    FormulaPtr fwd = mk_implies(a, b);
    FormulaPtr bwd = mk_implies(std::move(b), std::move(a));
    return mk_and(std::move(fwd), std::move(bwd));
}
FormulaPtr Formula::mk_dia(Group g, FormulaPtr f) { return mk_not(mk_box(g, mk_not(std::move(f)))); }
FormulaPtr Formula::mk_exists(Group g, FormulaPtr f) {
    return mk_not(mk_forall(g, mk_not(std::move(f))));
}
FormulaPtr Formula::mk_pos_know(Group g, FormulaPtr f) {
    return mk_not(mk_know(g, mk_not(std::move(f))));
}
FormulaPtr Formula::mk_pos_believe(Group g, FormulaPtr f) {
    return mk_not(mk_believe(g, mk_not(std::move(f))));
}

namespace {
int cmp_group(const Group& a, const Group& b) {
    if (a.full != b.full) return a.full ? 1 : -1;
    if (a.full) return 0;
    return a.mask < b.mask ? -1 : (a.mask > b.mask ? 1 : 0);
}
}  // namespace

int compare(const FormulaPtr& a, const FormulaPtr& b) {
    if (a.get() == b.get()) return 0;
    if (a->kind != b->kind) return int(a->kind) < int(b->kind) ? -1 : 1;
    switch (a->kind) {
        case Kind::Atom:
            return a->atom < b->atom ? -1 : (a->atom > b->atom ? 1 : 0);
        case Kind::Not:
            return compare(a->lhs, b->lhs);
        case Kind::And: {
            int c = compare(a->lhs, b->lhs);
            return c != 0 ? c : compare(a->rhs, b->rhs);
        }
        default: {
            int c = cmp_group(a->grp, b->grp);
            return c != 0 ? c : compare(a->lhs, b->lhs);
        }
    }
}

int Vocab::atom_id(const std::string& name) {
    int i = find_atom(name);
    if (i >= 0) return i;
    atoms.push_back(name);
    return int(atoms.size()) - 1;
}
int Vocab::agent_id(const std::string& name) {
    int i = find_agent(name);
    if (i >= 0) return i;
    if (int(agents.size()) >= kMaxAgents) throw std::invalid_argument("too many agents");
    agents.push_back(name);
    return int(agents.size()) - 1;
}
int Vocab::find_atom(const std::string& name) const {
    for (std::size_t i = 0; i < atoms.size(); ++i)
        if (atoms[i] == name) return int(i);
    return -1;
}
int Vocab::find_agent(const std::string& name) const {
    for (std::size_t i = 0; i < agents.size(); ++i)
        if (agents[i] == name) return int(i);
    return -1;
}

std::string print_group(const Group& g, const Vocab& v) {
    if (g.full) return "{A}";
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < kMaxAgents; ++i) {
        if (!(g.mask & (AgentSet{1} << i))) continue;
        if (!first) s += ",";
        first = false;
        s += (i < int(v.agents.size())) ? v.agents[i] : ("ag" + std::to_string(i));
    }
    return s + "}";
}

std::string print(const FormulaPtr& f, const Vocab& v) {
    switch (f->kind) {
        case Kind::Atom:
            return f->atom < int(v.atoms.size()) ? v.atoms[f->atom]
                                                 : ("at" + std::to_string(f->atom));
        case Kind::Not:
            return "~" + print(f->lhs, v);
        case Kind::And:
            return "(" + print(f->lhs, v) + " & " + print(f->rhs, v) + ")";
        case Kind::Box:
            return "Box" + print_group(f->grp, v) + " " + print(f->lhs, v);
        case Kind::Forall:
            return "Forall" + print_group(f->grp, v) + " " + print(f->lhs, v);
        case Kind::Know:
            return "K" + print_group(f->grp, v) + " " + print(f->lhs, v);
        case Kind::Believe:
            return "B" + print_group(f->grp, v) + " " + print(f->lhs, v);
        case Kind::Share:
            return "[share" + print_group(f->grp, v) + "] " + print(f->lhs, v);
    }
    return "?";
}

int modal_depth(const FormulaPtr& f) {
    switch (f->kind) {
        case Kind::Atom:
            return 0;
        case Kind::Not:
            return modal_depth(f->lhs);
        case Kind::And:
            return std::max(modal_depth(f->lhs), modal_depth(f->rhs));
        default:
            return 1 + modal_depth(f->lhs);
    }
}

namespace {
void collect_sub(const FormulaPtr& f, std::set<FormulaPtr, FormulaLess>& out) {
    if (!out.insert(f).second) return;
    if (f->lhs) collect_sub(f->lhs, out);
    if (f->rhs) collect_sub(f->rhs, out);
}
}  // namespace

std::vector<FormulaPtr> subformulas(const FormulaPtr& f) {
    std::set<FormulaPtr, FormulaLess> s;
    collect_sub(f, s);
    return {s.begin(), s.end()};
}

std::vector<int> atoms_of(const FormulaPtr& f) {
    std::set<int> ids;
    for (const auto& g : subformulas(f))
        if (g->kind == Kind::Atom) ids.insert(g->atom);
    return {ids.begin(), ids.end()};
}

AgentSet agents_of(const FormulaPtr& f) {
    AgentSet m = 0;
    for (const auto& g : subformulas(f))
        if (g->kind != Kind::Atom && g->kind != Kind::Not && g->kind != Kind::And && !g->grp.full)
            m |= g->grp.mask;
    return m;
}

bool mentions_full_group(const FormulaPtr& f) {
    for (const auto& g : subformulas(f))
        if (g->kind != Kind::Atom && g->kind != Kind::Not && g->kind != Kind::And && g->grp.full)
            return true;
    return false;
}

}  // namespace topoevid
