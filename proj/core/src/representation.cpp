#include "topoevid/representation.hpp"

#include <cmath>
#include <stdexcept>

#include "topoevid/enumerate.hpp"
#include "topoevid/semantics.hpp"

namespace topoevid {

namespace {

// alpha slots of an iA pseudo-model: agent masks then the universe
AgentSet slot_group(const EvPseudoModel& s, int a) {
    return a == s.agents ? s.universe() : AgentSet(AgentSet{1} << a);
}

}  // namespace

KBPseudoModel kb_from_evidence(const EvPseudoModel& s) {
    for (int a = 0; a <= s.agents; ++a)
        if (!s.has_group(slot_group(s, a)))
            throw std::invalid_argument("pseudo-model must carry all singletons and the universe");
    KBPseudoModel out;
    out.carrier = s.carrier;
    out.agents = s.agents;
    out.valuation = s.valuation;
    for (int a = 0; a <= s.agents; ++a) {
        const GroupRelations& gr = s.at(slot_group(s, a));
        Bits mx = max_worlds(gr.leq);
        Rel bel = Rel::empty(s.carrier);
        for (int st = 0; st < s.carrier; ++st) bel.row[st] = gr.sim.row[st] & mx;
        out.bel.push_back(bel);
        out.knows.push_back(gr.leq | bel);
    }
    return out;
}

EvPseudoModel evidence_from_kb(const KBPseudoModel& m) {
    EvPseudoModel out;
    out.carrier = m.carrier;
    out.agents = m.agents;
    out.fragment_ia = true;
    out.rel.assign(std::size_t(out.universe()) + 1, std::nullopt);
    out.valuation = m.valuation;

    auto confluence = [&](const Rel& kn) {
        // s ~ w iff some t is a kn-successor of both
        Rel sim = Rel::empty(m.carrier);
        for (int st = 0; st < m.carrier; ++st)
            for (int w = 0; w < m.carrier; ++w)
                if (kn.row[st].intersects(kn.row[w])) sim.add(st, w);
        return sim;
    };

    for (int i = 0; i < m.agents; ++i)
        out.rel[AgentSet{1} << i] = GroupRelations{m.knows[i], confluence(m.knows[i])};

    int A = m.universe_slot();
    Bits mxA = max_worlds(m.knows[A]);
    Rel leqA = m.knows[A];
    for (int i = 0; i < m.agents; ++i) leqA = leqA & m.knows[i];
    for (int st = 0; st < m.carrier; ++st)
        if (mxA.test(st)) {
            Bits only(m.carrier);
            only.set(st);
            leqA.row[st] &= only;
        }
    // With one agent the universe coincides with the singleton and this
    // overwrites it; either choice re-derives the same companion relations.
    out.rel[out.universe()] = GroupRelations{leqA, confluence(m.knows[A])};
    return out;
}

Unravelling unravel(const EvPseudoModel& s, int root, int depth) {
    if (root < 0 || root >= s.carrier) throw std::invalid_argument("root state out of range");
    if (depth < 0) throw std::invalid_argument("negative depth");

    std::vector<AgentSet> groups;
    for (AgentSet g = 1; g <= s.universe(); ++g)
        if (s.has_group(g)) groups.push_back(g);

    Unravelling u;
    u.depth = depth;
    u.last.push_back(root);
    u.parent.push_back(-1);
    u.step.push_back({});
    std::vector<int> len{0};

    for (std::size_t h = 0; h < u.last.size(); ++h) {
        if (len[h] >= depth) continue;
        for (AgentSet g : groups) {
            const GroupRelations& gr = s.at(g);
            for (int kind = 0; kind < 2; ++kind) {
                const Rel& r = kind == 0 ? gr.leq : gr.sim;
                const Bits& succ = r.row[u.last[h]];
                for (int t = succ.next(0); t != -1; t = succ.next(t + 1)) {
                    u.last.push_back(t);
                    u.parent.push_back(int(h));
                    u.step.push_back({kind == 0, g, t});
                    len.push_back(len[h] + 1);
                }
            }
        }
    }

    int nh = int(u.last.size());
    u.model.carrier = nh;
    u.model.agents = s.agents;
    u.model.leq.assign(s.agents, Rel::empty(nh));
    u.model.sim.assign(s.agents, Rel::empty(nh));
    for (int i = 0; i < s.agents; ++i) {
        Rel down = Rel::empty(nh);   // plausibility child-steps labelled with i
        Rel any = Rel::empty(nh);    // all child-steps labelled with i
        for (int h = 1; h < nh; ++h) {
            if (!(u.step[h].group & (AgentSet{1} << i))) continue;
            any.add(u.parent[h], h);
            if (u.step[h].plaus) down.add(u.parent[h], h);
        }
        u.model.leq[i] = down.transitive_closure();
        u.model.sim[i] = (down | any).equivalence_closure();
    }
    for (const auto& [name, v] : s.valuation) {
        Bits b(nh);
        for (int h = 0; h < nh; ++h)
            if (v.test(u.last[h])) b.set(h);
        u.model.valuation.emplace(name, b);
    }
    return u;
}

PMorphismReport last_pmorphism_check(const EvPseudoModel& s, const Unravelling& u) {
    PMorphismReport rep;
    rep.atoms_ok = true;
    for (const auto& [name, v] : s.valuation) {
        auto it = u.model.valuation.find(name);
        if (it == u.model.valuation.end()) {
            rep.atoms_ok = false;
            rep.detail += "atom " + name + " missing upstairs; ";
            continue;
        }
        for (int h = 0; h < u.model.carrier; ++h)
            if (it->second.test(h) != v.test(u.last[h])) {
                rep.atoms_ok = false;
                rep.detail += "atom " + name + " disagrees at history " + std::to_string(h) + "; ";
                break;
            }
    }

    std::vector<int> len(u.model.carrier, 0);
    for (int h = 1; h < u.model.carrier; ++h) len[h] = len[u.parent[h]] + 1;

    rep.forth_ok = true;
    rep.back_interior_ok = true;
    rep.back_frontier_ok = true;
    for (int i = 0; i < s.agents; ++i) {
        const GroupRelations& gi = s.at(AgentSet{1} << i);
        for (int h = 0; h < u.model.carrier; ++h) {
            for (int h2 = u.model.leq[i].row[h].next(0); h2 != -1;
                 h2 = u.model.leq[i].row[h].next(h2 + 1))
                if (!gi.leq.has(u.last[h], u.last[h2])) {
                    rep.forth_ok = false;
                    rep.detail += "forth fails (plausibility, agent " + std::to_string(i) + "); ";
                }
            for (int h2 = u.model.sim[i].row[h].next(0); h2 != -1;
                 h2 = u.model.sim[i].row[h].next(h2 + 1))
                if (!gi.sim.has(u.last[h], u.last[h2])) {
                    rep.forth_ok = false;
                    rep.detail += "forth fails (hard evidence, agent " + std::to_string(i) + "); ";
                }
            // back: every source successor of last(h) must be matched above h
            const Bits& down = gi.leq.row[u.last[h]];
            for (int t = down.next(0); t != -1; t = down.next(t + 1)) {
                bool matched = false;
                const Bits& hsucc = u.model.leq[i].row[h];
                for (int h2 = hsucc.next(0); h2 != -1 && !matched; h2 = hsucc.next(h2 + 1))
                    matched = (u.last[h2] == t);
                if (!matched) {
                    if (len[h] < u.depth)
                        rep.back_interior_ok = false;
                    else
                        rep.back_frontier_ok = false;
                }
            }
        }
    }
    return rep;
}


SatVerdict bounded_sat(const FormulaPtr& f, const Vocab& v, int maxStates, const SatOptions& opts) {
    if (maxStates < 1 || maxStates > 5) throw std::invalid_argument("state bound out of range");
    for (const auto& g : subformulas(f))
        if (g->kind == Kind::Share || g->kind == Kind::Know || g->kind == Kind::Believe)
            throw std::invalid_argument(
                "bounded_sat expects a static evidence formula; translate/reduce first");

    int nAgents = opts.nAgents;
    if (nAgents == 0) {
        AgentSet used = agents_of(f);
        nAgents = 1;
        for (int i = 0; i < kMaxAgents; ++i)
            if (used & (AgentSet{1} << i)) nAgents = i + 1;
    }
    std::vector<int> atoms = atoms_of(f);

    SatVerdict verdict;
    verdict.bound = maxStates;
    FormulaSet phi = closure_set(f, nAgents);
    verdict.closure_size = phi.size();
    verdict.theoretic_bound = std::pow(2.0, double(phi.size()));

    for (int n = 1; n <= maxStates && !verdict.sat; ++n) {
        if (atoms.size() * n > 20) throw std::invalid_argument("too many atom/state combinations");
        std::uint32_t valuations = std::uint32_t(1) << (atoms.size() * n);
        enumerate_frames(n, nAgents, opts.prune_isomorphs,
                         [&](const RelationalEvidenceModel& frame) {
            RelationalEvidenceModel m = frame;
            for (std::uint32_t val = 0; val < valuations; ++val) {
                m.valuation.clear();
                for (std::size_t ai = 0; ai < atoms.size(); ++ai) {
                    Bits b(n);
                    for (int st = 0; st < n; ++st)
                        if ((val >> (ai * n + st)) & 1) b.set(st);
                    m.valuation.emplace(v.atoms[atoms[ai]], b);
                }
                ++verdict.models_tried;
                Bits ext(n);
                if (opts.semantics == SatSemantics::Topo) {
                    ext = eval_topo(topo_of_rel(m), f, v).extension;
                } else {
                    ext = eval_ev_pseudo(ev_pseudo_of_rel(m, true), f, v).extension;
                }
                if (ext.any()) {
                    // re-check through the other route before accepting
                    Bits other = (opts.semantics == SatSemantics::Topo)
                                     ? eval_ev_pseudo(ev_pseudo_of_rel(m, true), f, v).extension
                                     : eval_relational(m, f, v).extension;
                    if (!(other == ext))
                        throw std::logic_error("witness failed re-evaluation");
                    verdict.sat = true;
                    verdict.witness = m;
                    verdict.witness_state = ext.first();
                    return false;
                }
            }
            return true;
        });
    }
    return verdict;
}

}  // namespace topoevid
