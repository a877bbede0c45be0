#pragma once

// Formula ASTs. Everything is normalized into eight node kinds: derived
// connectives (|, ->, <->, Dia, Exists, <K>, <B>) are expanded at parse time.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace topoevid {

using AgentSet = std::uint16_t;
inline constexpr int kMaxAgents = 8;

// A group of agents. `full` marks the symbolic whole-universe group "A",
// which only becomes a concrete set once an agent universe is fixed.
struct Group {
    bool full = false;
    AgentSet mask = 0;
};

inline bool operator==(const Group& a, const Group& b) {
    return a.full == b.full && (a.full || a.mask == b.mask);
}

// Resolves a group against a universe of nAgents agents. Rejects empty groups
// and out-of-range members.
AgentSet group_mask(const Group& g, int nAgents);

// Is the group a single agent or the symbolic universe? (The shape allowed
// under knowledge and belief operators in the restricted language.)
bool group_is_alpha(const Group& g);

enum class Kind { Atom, Not, And, Box, Forall, Know, Believe, Share };

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

class Formula {
public:
    Kind kind;
    int atom = -1;     // Atom
    Group grp;         // Box / Forall / Know / Believe / Share
    FormulaPtr lhs, rhs;

    static FormulaPtr mk_atom(int id);
    static FormulaPtr mk_not(FormulaPtr f);
    static FormulaPtr mk_and(FormulaPtr a, FormulaPtr b);
    static FormulaPtr mk_box(Group g, FormulaPtr f);
    static FormulaPtr mk_forall(Group g, FormulaPtr f);
    static FormulaPtr mk_know(Group g, FormulaPtr f);
    static FormulaPtr mk_believe(Group g, FormulaPtr f);
    static FormulaPtr mk_share(Group g, FormulaPtr f);

    // derived connectives
    static FormulaPtr mk_or(FormulaPtr a, FormulaPtr b);
    static FormulaPtr mk_implies(FormulaPtr a, FormulaPtr b);
    static FormulaPtr mk_iff(FormulaPtr a, FormulaPtr b);
    static FormulaPtr mk_dia(Group g, FormulaPtr f);
    static FormulaPtr mk_exists(Group g, FormulaPtr f);
    static FormulaPtr mk_pos_know(Group g, FormulaPtr f);
    static FormulaPtr mk_pos_believe(Group g, FormulaPtr f);
};

// three-way structural comparison; total order
int compare(const FormulaPtr& a, const FormulaPtr& b);
inline bool equal(const FormulaPtr& a, const FormulaPtr& b) { return compare(a, b) == 0; }

struct FormulaLess {
    bool operator()(const FormulaPtr& a, const FormulaPtr& b) const { return compare(a, b) < 0; }
};

// Atom and agent names. Parsing extends a vocabulary; printing reads it.
struct Vocab {
    std::vector<std::string> atoms;
    std::vector<std::string> agents;

    int atom_id(const std::string& name);        // interning
    int agent_id(const std::string& name);
    int find_atom(const std::string& name) const;   // -1 if absent
    int find_agent(const std::string& name) const;
};

std::string print(const FormulaPtr& f, const Vocab& v);
std::string print_group(const Group& g, const Vocab& v);

int modal_depth(const FormulaPtr& f);

// All subformulas including f itself, no duplicates.
std::vector<FormulaPtr> subformulas(const FormulaPtr& f);

// Atoms / agents mentioned (symbolic full groups contribute no agents).
std::vector<int> atoms_of(const FormulaPtr& f);
AgentSet agents_of(const FormulaPtr& f);
bool mentions_full_group(const FormulaPtr& f);

}  // namespace topoevid
