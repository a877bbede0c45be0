#include "topoevid/semantics.hpp"

#include <map>
#include <stdexcept>

namespace topoevid {

namespace {

Bits box_along(const Rel& r, const Bits& p) {
    Bits out(r.n);
    for (int s = 0; s < r.n; ++s)
        if (r.row[s].subset_of(p)) out.set(s);
    return out;
}

Mask atom_mask(const TopoEModel& m, const Vocab& v, int atom) {
    if (atom >= int(v.atoms.size())) throw std::invalid_argument("atom id outside vocabulary");
    auto it = m.valuation.find(v.atoms[atom]);
    if (it == m.valuation.end())
        throw std::invalid_argument("atom '" + v.atoms[atom] + "' not valued by the model");
    return it->second;
}

template <typename M>
Bits atom_bits(const M& m, const Vocab& v, int atom) {
    if (atom >= int(v.atoms.size())) throw std::invalid_argument("atom id outside vocabulary");
    auto it = m.valuation.find(v.atoms[atom]);
    if (it == m.valuation.end())
        throw std::invalid_argument("atom '" + v.atoms[atom] + "' not valued by the model");
    return it->second;
}

struct TopoEval {
    const Vocab& v;
    std::vector<TraceEntry>* trace;

    // per-model caches keyed on demand
    struct Level {
        const TopoEModel* m;
        std::map<AgentSet, GroupStructure> groups;
        std::map<AgentSet, TopoEModel> shared;
    };

    const GroupStructure& grp(Level& lv, const Group& g) {
        AgentSet mask = group_mask(g, lv.m->agents);
        auto it = lv.groups.find(mask);
        if (it == lv.groups.end())
            it = lv.groups.emplace(mask, group_structure(*lv.m, mask)).first;
        return it->second;
    }

    Mask run(Level& lv, const FormulaPtr& f) {
        Mask x = full_mask(lv.m->carrier);
        Mask r = 0;
        switch (f->kind) {
            case Kind::Atom:
                r = atom_mask(*lv.m, v, f->atom);
                break;
            case Kind::Not:
                r = x & ~run(lv, f->lhs);
                break;
            case Kind::And:
                r = run(lv, f->lhs) & run(lv, f->rhs);
                break;
            case Kind::Box:
                r = grp(lv, f->grp).topo.interior(run(lv, f->lhs));
                break;
            case Kind::Forall: {
                Mask p = run(lv, f->lhs);
                const GroupStructure& gs = grp(lv, f->grp);
                for (int s = 0; s < lv.m->carrier; ++s)
                    if (subset(gs.part.cell_of(s), p)) r |= Mask{1} << s;
                break;
            }
            case Kind::Believe:
            case Kind::Know: {
                Mask p = run(lv, f->lhs);
                const GroupStructure& gs = grp(lv, f->grp);
                Mask core = gs.topo.closure(gs.topo.interior(p));
                Mask b = 0;
                for (int s = 0; s < lv.m->carrier; ++s)
                    if (subset(gs.part.cell_of(s), core)) b |= Mask{1} << s;
                r = (f->kind == Kind::Believe) ? b : (b & gs.topo.interior(p));
                break;
            }
            case Kind::Share: {
                AgentSet mask = group_mask(f->grp, lv.m->agents);
                auto it = lv.shared.find(mask);
                if (it == lv.shared.end())
                    it = lv.shared.emplace(mask, share_update(*lv.m, mask)).first;
                Level inner{&it->second, {}, {}};
                r = run(inner, f->lhs);
                break;
            }
        }
        if (trace) trace->push_back({f, Bits::from_mask(r, lv.m->carrier)});
        return r;
    }
};

}  // namespace

EvalResult eval_topo(const TopoEModel& m, const FormulaPtr& f, const Vocab& v, bool want_trace) {
    EvalResult res;
    TopoEval ev{v, want_trace ? &res.trace : nullptr};
    TopoEval::Level lv{&m, {}, {}};
    res.extension = Bits::from_mask(ev.run(lv, f), m.carrier);
    return res;
}

namespace {

template <typename GetBox>
Bits eval_rel_like(int carrier, const Vocab& v, const FormulaPtr& f, GetBox&& modal,
                   std::vector<TraceEntry>* trace, const std::map<std::string, Bits>& valuation) {
    Bits r(carrier);
    switch (f->kind) {
        case Kind::Atom: {
            if (f->atom >= int(v.atoms.size()))
                throw std::invalid_argument("atom id outside vocabulary");
            auto it = valuation.find(v.atoms[f->atom]);
            if (it == valuation.end())
                throw std::invalid_argument("atom '" + v.atoms[f->atom] +
                                            "' not valued by the model");
            r = it->second;
            break;
        }
        case Kind::Not:
            r = ~eval_rel_like(carrier, v, f->lhs, modal, trace, valuation);
            break;
        case Kind::And:
            r = eval_rel_like(carrier, v, f->lhs, modal, trace, valuation) &
                eval_rel_like(carrier, v, f->rhs, modal, trace, valuation);
            break;
        default:
            r = modal(f, eval_rel_like(carrier, v, f->lhs, modal, trace, valuation));
            break;
    }
    if (trace) trace->push_back({f, r});
    return r;
}

}  // namespace

EvalResult eval_relational(const RelationalEvidenceModel& m, const FormulaPtr& f, const Vocab& v,
                           bool want_trace) {
    EvalResult res;
    auto modal = [&](const FormulaPtr& g, const Bits& p) -> Bits {
        AgentSet mask = group_mask(g->grp, m.agents);
        switch (g->kind) {
            case Kind::Box:
                return box_along(m.group_leq(mask), p);
            case Kind::Forall:
                return box_along(m.group_sim(mask), p);
            default:
                throw std::invalid_argument(
                    "relational semantics covers static evidence formulas only");
        }
    };
    res.extension =
        eval_rel_like(m.carrier, v, f, modal, want_trace ? &res.trace : nullptr, m.valuation);
    return res;
}

EvalResult eval_ev_pseudo(const EvPseudoModel& m, const FormulaPtr& f, const Vocab& v,
                          bool want_trace) {
    EvalResult res;
    auto modal = [&](const FormulaPtr& g, const Bits& p) -> Bits {
        AgentSet mask = group_mask(g->grp, m.agents);
        const GroupRelations& gr = m.at(mask);
        switch (g->kind) {
            case Kind::Box:
                return box_along(gr.leq, p);
            case Kind::Forall:
                return box_along(gr.sim, p);
            default:
                throw std::invalid_argument(
                    "pseudo-model semantics covers static evidence formulas only");
        }
    };
    res.extension =
        eval_rel_like(m.carrier, v, f, modal, want_trace ? &res.trace : nullptr, m.valuation);
    return res;
}

EvalResult eval_kb_pseudo(const KBPseudoModel& m, const FormulaPtr& f, const Vocab& v,
                          bool want_trace) {
    EvalResult res;
    auto modal = [&](const FormulaPtr& g, const Bits& p) -> Bits {
        if (!group_is_alpha(g->grp))
            throw std::invalid_argument("K/B pseudo-models carry single agents and the universe");
        int slot;
        if (g->grp.full) {
            slot = m.universe_slot();
        } else {
            slot = __builtin_ctz(g->grp.mask);
            if (slot >= m.agents) throw std::invalid_argument("agent outside universe");
        }
        switch (g->kind) {
            case Kind::Know:
                return box_along(m.knows[slot], p);
            case Kind::Believe:
                return box_along(m.bel[slot], p);
            default:
                throw std::invalid_argument(
                    "K/B semantics covers knowledge-belief formulas only");
        }
    };
    res.extension =
        eval_rel_like(m.carrier, v, f, modal, want_trace ? &res.trace : nullptr, m.valuation);
    return res;
}

OpTable op_table(const TopoEModel& m, AgentSet group, Mask p) {
    GroupStructure gs = group_structure(m, group);
    Mask x = full_mask(m.carrier);
    OpTable t{};
    t.box = gs.topo.interior(p);
    t.dia = gs.topo.closure(p);
    Mask core = gs.topo.closure(t.box);
    for (int s = 0; s < m.carrier; ++s) {
        Mask bit = Mask{1} << s;
        if (subset(gs.part.cell_of(s), p)) t.forall |= bit;
        if (subset(gs.part.cell_of(s), core)) t.believe |= bit;
    }
    t.know = t.box & t.believe;
    // <K> as the dual of K on the complement
    Mask notp = x & ~p;
    Mask boxn = gs.topo.interior(notp);
    Mask coren = gs.topo.closure(boxn);
    Mask kn = 0;
    for (int s = 0; s < m.carrier; ++s)
        if (subset(gs.part.cell_of(s), coren)) kn |= Mask{1} << s;
    kn &= boxn;
    t.pos_know = x & ~kn;
    return t;
}

}  // namespace topoevid
