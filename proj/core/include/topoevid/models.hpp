#pragma once

// The four model kinds and the structure-level operations between them.
// Agents are indices 0..agents-1; groups are agent bitmasks; atoms are
// looked up by name in the valuation.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "topoevid/formula.hpp"
#include "topoevid/relation.hpp"
#include "topoevid/topology.hpp"

namespace topoevid {

struct ValidationReport {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
    void add(std::string p) { problems.push_back(std::move(p)); }
    std::string text() const;
};

// ----- evidence models with hard (partition) and soft (topology) evidence --

struct TopoEModel {
    int carrier = 0;
    int agents = 0;
    std::vector<Partition> part;   // per agent
    std::vector<Topology> topo;    // per agent
    std::map<std::string, Mask> valuation;
};

// Partitions partition, topologies generated over the carrier, and every
// partition cell is open for its agent.
ValidationReport validate_topo(const TopoEModel& m);

struct GroupStructure {
    Partition part;   // common refinement over the group
    Topology topo;    // join topology over the group
};

GroupStructure group_structure(const TopoEModel& m, AgentSet group);

// Insiders adopt the pooled group evidence; outsiders are untouched.
TopoEModel share_update(const TopoEModel& m, AgentSet group);

// ----- relational evidence models ------------------------------------------

struct RelationalEvidenceModel {
    int carrier = 0;
    int agents = 0;
    std::vector<Rel> leq;  // plausibility preorder per agent
    std::vector<Rel> sim;  // hard-evidence equivalence per agent
    std::map<std::string, Bits> valuation;

    Rel group_leq(AgentSet group) const;  // intersection over members
    Rel group_sim(AgentSet group) const;
};

ValidationReport validate_relational(const RelationalEvidenceModel& m);

// Specialization preorder and partition-equality per agent.
RelationalEvidenceModel rel_of_topo(const TopoEModel& m);

// Up-set topologies and quotient partitions per agent. The result is
// Alexandroff, so the round trip through rel_of_topo restores the relations.
TopoEModel topo_of_rel(const RelationalEvidenceModel& m);

// ----- group-indexed evidence pseudo-models --------------------------------

struct GroupRelations {
    Rel leq, sim;
};

struct EvPseudoModel {
    int carrier = 0;
    int agents = 0;
    bool fragment_ia = false;  // only singletons and the whole universe present
    // indexed by group mask; absent groups are disengaged
    std::vector<std::optional<GroupRelations>> rel;
    std::map<std::string, Bits> valuation;

    AgentSet universe() const { return AgentSet((1u << agents) - 1); }
    bool has_group(AgentSet g) const {
        return g < rel.size() && rel[g].has_value();
    }
    const GroupRelations& at(AgentSet g) const;
};

// Preorder/equivalence per present group, inclusion leq <= sim,
// anti-monotonicity along group inclusion, and for iA-fragment models the
// right set of present groups.
ValidationReport validate_ev_pseudo(const EvPseudoModel& m);

// Is every present group relation the intersection of its members'
// singleton relations?
bool is_standard(const EvPseudoModel& m);

// All non-empty groups, relations by intersection. `ia_only` keeps just the
// singletons and the universe.
EvPseudoModel ev_pseudo_of_rel(const RelationalEvidenceModel& m, bool ia_only = false);

// Inverse for standard pseudo-models; rejects non-standard input.
RelationalEvidenceModel rel_of_standard_pseudo(const EvPseudoModel& m);

// ----- knowledge-belief pseudo-models --------------------------------------

// index agents is the whole-universe slot
struct KBPseudoModel {
    int carrier = 0;
    int agents = 0;
    std::vector<Rel> knows;  // per alpha: preorder
    std::vector<Rel> bel;    // per alpha: serial, transitive, euclidean
    std::map<std::string, Bits> valuation;

    int alpha_count() const { return agents + 1; }
    int universe_slot() const { return agents; }
};

// The ten defining conditions, with counterexample positions in the report:
// preorder, seriality/transitivity/euclideanity, bel <= knows, strong
// transitivity, strong euclideanity, full belief, the mutual-knowledge
// condition against each agent, super-introspection, and reachability of a
// common fixpoint world.
ValidationReport validate_kb_pseudo(const KBPseudoModel& m);

}  // namespace topoevid
