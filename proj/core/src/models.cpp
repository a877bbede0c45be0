#include "topoevid/models.hpp"

#include <stdexcept>

namespace topoevid {

std::string ValidationReport::text() const {
    if (problems.empty()) return "ok";
    std::string s;
    for (const auto& p : problems) {
        s += "- " + p + "\n";
    }
    return s;
}

namespace {

std::vector<int> members(AgentSet g) {
    std::vector<int> r;
    for (int i = 0; i < kMaxAgents; ++i)
        if (g & (AgentSet{1} << i)) r.push_back(i);
    return r;
}

void check_group_arg(AgentSet g, int agents) {
    if (g == 0) throw std::invalid_argument("empty group");
    if (g & ~AgentSet((1u << agents) - 1)) throw std::invalid_argument("group outside agent universe");
}

}  // namespace

ValidationReport validate_topo(const TopoEModel& m) {
    ValidationReport r;
    if (m.carrier < 1 || m.carrier > kMaxCarrier) {
        r.add("carrier size out of range");
        return r;
    }
    if (m.agents < 1 || m.agents > kMaxAgents) {
        r.add("agent count out of range");
        return r;
    }
    if (int(m.part.size()) != m.agents || int(m.topo.size()) != m.agents) {
        r.add("per-agent structure count mismatch");
        return r;
    }
    Mask x = full_mask(m.carrier);
    for (int i = 0; i < m.agents; ++i) {
        const Partition& p = m.part[i];
        const Topology& t = m.topo[i];
        if (p.carrier != m.carrier || t.carrier != m.carrier) {
            r.add("agent " + std::to_string(i) + ": carrier mismatch");
            continue;
        }
        if (!is_partition(p)) r.add("agent " + std::to_string(i) + ": cells do not partition the carrier");
        if (!t.is_open(0) || !t.is_open(x))
            r.add("agent " + std::to_string(i) + ": opens miss the empty set or the carrier");
        for (std::size_t a = 0; a < t.opens.size(); ++a)
            for (std::size_t b = a; b < t.opens.size(); ++b) {
                if (!t.is_open(t.opens[a] & t.opens[b]))
                    r.add("agent " + std::to_string(i) + ": opens not closed under intersection");
                if (!t.is_open(t.opens[a] | t.opens[b]))
                    r.add("agent " + std::to_string(i) + ": opens not closed under union");
                if (!r.problems.empty() && r.problems.size() > 20) return r;
            }
        for (Mask c : p.cells)
            if (!t.is_open(c))
                r.add("agent " + std::to_string(i) + ": partition cell not open");
    }
    for (const auto& [name, v] : m.valuation)
        if (!subset(v, x)) r.add("atom " + name + ": valuation outside carrier");
    return r;
}

GroupStructure group_structure(const TopoEModel& m, AgentSet group) {
    check_group_arg(group, m.agents);
    std::vector<Partition> ps;
    std::vector<Topology> ts;
    for (int i : members(group)) {
        ps.push_back(m.part[i]);
        ts.push_back(m.topo[i]);
    }
    return GroupStructure{join_partition(ps), join(ts)};
}

TopoEModel share_update(const TopoEModel& m, AgentSet group) {
    GroupStructure g = group_structure(m, group);
    TopoEModel out = m;
    for (int i : members(group)) {
        out.part[i] = g.part;
        out.topo[i] = g.topo;
    }
    return out;
}

Rel RelationalEvidenceModel::group_leq(AgentSet group) const {
    check_group_arg(group, agents);
    Rel r = Rel::total(carrier);
    for (int i : members(group)) r = r & leq[i];
    return r;
}

Rel RelationalEvidenceModel::group_sim(AgentSet group) const {
    check_group_arg(group, agents);
    Rel r = Rel::total(carrier);
    for (int i : members(group)) r = r & sim[i];
    return r;
}

ValidationReport validate_relational(const RelationalEvidenceModel& m) {
    ValidationReport r;
    if (m.carrier < 1) {
        r.add("empty carrier");
        return r;
    }
    if (m.agents < 1 || m.agents > kMaxAgents) {
        r.add("agent count out of range");
        return r;
    }
    if (int(m.leq.size()) != m.agents || int(m.sim.size()) != m.agents) {
        r.add("per-agent relation count mismatch");
        return r;
    }
    for (int i = 0; i < m.agents; ++i) {
        if (m.leq[i].n != m.carrier || m.sim[i].n != m.carrier) {
            r.add("agent " + std::to_string(i) + ": relation arity mismatch");
            continue;
        }
        if (!m.leq[i].is_preorder())
            r.add("agent " + std::to_string(i) + ": plausibility relation is not a preorder");
        if (!m.sim[i].is_equivalence())
            r.add("agent " + std::to_string(i) + ": hard-evidence relation is not an equivalence");
        if (!m.leq[i].subset_of(m.sim[i]))
            r.add("agent " + std::to_string(i) + ": plausibility not included in hard evidence");
    }
    for (const auto& [name, v] : m.valuation)
        if (v.size() != m.carrier) r.add("atom " + name + ": valuation arity mismatch");
    return r;
}

RelationalEvidenceModel rel_of_topo(const TopoEModel& m) {
    RelationalEvidenceModel out;
    out.carrier = m.carrier;
    out.agents = m.agents;
    out.leq.assign(m.agents, Rel::empty(m.carrier));
    out.sim.assign(m.agents, Rel::empty(m.carrier));
    for (int i = 0; i < m.agents; ++i) {
        // specialization preorder of the topology, cut to the partition
        std::vector<Mask> hull(m.carrier, full_mask(m.carrier));
        for (Mask u : m.topo[i].opens)
            for (int x = 0; x < m.carrier; ++x)
                if (u & (Mask{1} << x)) hull[x] &= u;
        for (int x = 0; x < m.carrier; ++x) {
            Mask cell = m.part[i].cell_of(x);
            for (int y = 0; y < m.carrier; ++y) {
                bool same_cell = (cell >> y) & 1;
                if (same_cell) out.sim[i].add(x, y);
                if (same_cell && ((hull[x] >> y) & 1)) out.leq[i].add(x, y);
            }
        }
    }
    for (const auto& [name, v] : m.valuation)
        out.valuation.emplace(name, Bits::from_mask(v, m.carrier));
    return out;
}

TopoEModel topo_of_rel(const RelationalEvidenceModel& m) {
    if (m.carrier > kMaxCarrier) throw std::invalid_argument("carrier too large for a topology");
    TopoEModel out;
    out.carrier = m.carrier;
    out.agents = m.agents;
    for (int i = 0; i < m.agents; ++i) {
        std::vector<Mask> ups;
        for (int x = 0; x < m.carrier; ++x) ups.push_back(m.leq[i].row[x].to_mask());
        out.topo.push_back(generate_topology(ups, m.carrier));
        std::vector<Mask> cells;
        Bits seen(m.carrier);
        for (int x = 0; x < m.carrier; ++x) {
            if (seen.test(x)) continue;
            seen |= m.sim[i].row[x];
            cells.push_back(m.sim[i].row[x].to_mask());
        }
        out.part.push_back(make_partition(m.carrier, cells));
    }
    for (const auto& [name, v] : m.valuation) out.valuation.emplace(name, v.to_mask());
    return out;
}

const GroupRelations& EvPseudoModel::at(AgentSet g) const {
    if (!has_group(g)) throw std::invalid_argument("group not carried by this pseudo-model");
    return *rel[g];
}

ValidationReport validate_ev_pseudo(const EvPseudoModel& m) {
    ValidationReport r;
    if (m.carrier < 1) {
        r.add("empty carrier");
        return r;
    }
    if (m.agents < 1 || m.agents > kMaxAgents) {
        r.add("agent count out of range");
        return r;
    }
    AgentSet all = m.universe();
    if (m.rel.size() != std::size_t(all) + 1) {
        r.add("group table size mismatch");
        return r;
    }
    if (m.rel[0].has_value()) r.add("empty group carried");
    if (m.fragment_ia) {
        for (AgentSet g = 1; g <= all; ++g) {
            bool should = (__builtin_popcount(g) == 1) || g == all;
            if (should != m.has_group(g))
                r.add("fragment model carries the wrong groups");
        }
    } else {
        for (AgentSet g = 1; g <= all; ++g)
            if (!m.has_group(g)) r.add("full-signature model missing a group");
    }
    for (AgentSet g = 1; g <= all; ++g) {
        if (!m.has_group(g)) continue;
        const GroupRelations& gr = *m.rel[g];
        if (gr.leq.n != m.carrier || gr.sim.n != m.carrier) {
            r.add("group " + std::to_string(g) + ": relation arity mismatch");
            continue;
        }
        if (!gr.leq.is_preorder()) r.add("group " + std::to_string(g) + ": not a preorder");
        if (!gr.sim.is_equivalence()) r.add("group " + std::to_string(g) + ": not an equivalence");
        if (!gr.leq.subset_of(gr.sim))
            r.add("group " + std::to_string(g) + ": plausibility not included in hard evidence");
        for (AgentSet j = 1; j < g; ++j) {
            if ((j & ~g) || !m.has_group(j)) continue;
            // j is a proper sub-group of g: more agents, tighter relations
            if (!gr.leq.subset_of(m.rel[j]->leq) || !gr.sim.subset_of(m.rel[j]->sim))
                r.add("groups " + std::to_string(j) + "<=" + std::to_string(g) +
                      ": anti-monotonicity fails");
        }
    }
    for (const auto& [name, v] : m.valuation)
        if (v.size() != m.carrier) r.add("atom " + name + ": valuation arity mismatch");
    return r;
}

bool is_standard(const EvPseudoModel& m) {
    AgentSet all = m.universe();
    for (int i = 0; i < m.agents; ++i)
        if (!m.has_group(AgentSet{1} << i)) return false;
    for (AgentSet g = 1; g <= all; ++g) {
        if (!m.has_group(g)) continue;
        Rel leq = Rel::total(m.carrier), sim = Rel::total(m.carrier);
        for (int i : members(g)) {
            leq = leq & m.rel[AgentSet{1} << i]->leq;
            sim = sim & m.rel[AgentSet{1} << i]->sim;
        }
        if (!(m.rel[g]->leq == leq) || !(m.rel[g]->sim == sim)) return false;
    }
    return true;
}

EvPseudoModel ev_pseudo_of_rel(const RelationalEvidenceModel& m, bool ia_only) {
    EvPseudoModel out;
    out.carrier = m.carrier;
    out.agents = m.agents;
    out.fragment_ia = ia_only;
    AgentSet all = out.universe();
    out.rel.assign(std::size_t(all) + 1, std::nullopt);
    for (AgentSet g = 1; g <= all; ++g) {
        if (ia_only && __builtin_popcount(g) != 1 && g != all) continue;
        out.rel[g] = GroupRelations{m.group_leq(g), m.group_sim(g)};
    }
    out.valuation = m.valuation;
    return out;
}

RelationalEvidenceModel rel_of_standard_pseudo(const EvPseudoModel& m) {
    if (!is_standard(m)) throw std::invalid_argument("pseudo-model is not standard");
    RelationalEvidenceModel out;
    out.carrier = m.carrier;
    out.agents = m.agents;
    for (int i = 0; i < m.agents; ++i) {
        out.leq.push_back(m.rel[AgentSet{1} << i]->leq);
        out.sim.push_back(m.rel[AgentSet{1} << i]->sim);
    }
    out.valuation = m.valuation;
    return out;
}

ValidationReport validate_kb_pseudo(const KBPseudoModel& m) {
    ValidationReport r;
    if (m.carrier < 1) {
        r.add("empty carrier");
        return r;
    }
    if (m.agents < 1 || m.agents > kMaxAgents) {
        r.add("agent count out of range");
        return r;
    }
    if (int(m.knows.size()) != m.alpha_count() || int(m.bel.size()) != m.alpha_count()) {
        r.add("per-index relation count mismatch");
        return r;
    }
    auto slot_name = [&](int a) {
        return a == m.universe_slot() ? std::string("A") : std::to_string(a);
    };
    for (int a = 0; a < m.alpha_count(); ++a) {
        const Rel& kn = m.knows[a];
        const Rel& be = m.bel[a];
        if (kn.n != m.carrier || be.n != m.carrier) {
            r.add(slot_name(a) + ": relation arity mismatch");
            continue;
        }
        if (!kn.is_preorder()) r.add(slot_name(a) + ": knowledge relation is not a preorder");
        if (!be.serial()) r.add(slot_name(a) + ": belief relation is not serial");
        if (!be.transitive()) r.add(slot_name(a) + ": belief relation is not transitive");
        if (!be.euclidean()) r.add(slot_name(a) + ": belief relation is not euclidean");
        if (!be.subset_of(kn)) r.add(slot_name(a) + ": belief not included in knowledge");
        for (int s = 0; s < m.carrier; ++s)
            for (int t = kn.row[s].next(0); t != -1; t = kn.row[s].next(t + 1)) {
                if (!be.row[t].subset_of(be.row[s]))
                    r.add(slot_name(a) + ": strong transitivity fails at (" + std::to_string(s) +
                          "," + std::to_string(t) + ")");
                if (!be.row[s].subset_of(be.row[t]))
                    r.add(slot_name(a) + ": strong euclideanity fails at (" + std::to_string(s) +
                          "," + std::to_string(t) + ")");
                if (r.problems.size() > 40) return r;
            }
        for (int s = 0; s < m.carrier; ++s)
            for (int t = be.row[s].next(0); t != -1; t = be.row[s].next(t + 1))
                if (!kn.row[t].subset_of(be.row[s]))
                    r.add(slot_name(a) + ": full belief fails at (" + std::to_string(s) + "," +
                          std::to_string(t) + ")");
    }
    if (!r.ok()) return r;
    int A = m.universe_slot();
    for (int i = 0; i < m.agents; ++i)
        for (int s = 0; s < m.carrier; ++s)
            if (!m.knows[A].row[s].subset_of(m.knows[i].row[s] | m.bel[A].row[s]))
                r.add("mutual-knowledge condition fails against agent " + std::to_string(i) +
                      " at " + std::to_string(s));
    for (int s = 0; s < m.carrier; ++s)
        for (int t = m.knows[A].row[s].next(0); t != -1; t = m.knows[A].row[s].next(t + 1))
            for (int i = 0; i < m.agents; ++i)
                if (!(m.bel[i].row[s] == m.bel[i].row[t]))
                    r.add("super-introspection fails for agent " + std::to_string(i) + " at (" +
                          std::to_string(s) + "," + std::to_string(t) + ")");
    Rel reach = m.bel[A];
    for (int i = 0; i < m.agents; ++i) reach = reach & m.knows[i];
    for (int s = 0; s < m.carrier; ++s)
        if (reach.row[s].none())
            r.add("no commonly believed world reachable from " + std::to_string(s));
    for (const auto& [name, v] : m.valuation)
        if (v.size() != m.carrier) r.add("atom " + name + ": valuation arity mismatch");
    return r;
}

}  // namespace topoevid
