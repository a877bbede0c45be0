#include "topoevid/transform.hpp"

#include <stdexcept>

namespace topoevid {

namespace {

bool alpha_ok(const Group& g, int nAgents) {
    if (group_is_alpha(g)) return true;
    if (nAgents > 0 && !g.full && g.mask == AgentSet((1u << nAgents) - 1)) return true;
    return false;
}

bool check_lang(const FormulaPtr& f, Language lang, int nAgents) {
    switch (f->kind) {
        case Kind::Atom:
            return true;
        case Kind::Not:
            return check_lang(f->lhs, lang, nAgents);
        case Kind::And:
            return check_lang(f->lhs, lang, nAgents) && check_lang(f->rhs, lang, nAgents);
        case Kind::Box:
        case Kind::Forall:
            if (lang == Language::KBIA || lang == Language::KBFull || lang == Language::KBDyn)
                return false;
            if (lang == Language::EvIA && !alpha_ok(f->grp, nAgents)) return false;
            return check_lang(f->lhs, lang, nAgents);
        case Kind::Know:
        case Kind::Believe:
            if (lang != Language::KBIA && lang != Language::KBFull && lang != Language::KBDyn)
                return false;
            if (lang != Language::KBFull && !alpha_ok(f->grp, nAgents)) return false;
            return check_lang(f->lhs, lang, nAgents);
        case Kind::Share:
            if (lang == Language::EvDyn) return check_lang(f->lhs, lang, nAgents);
            if (lang == Language::KBDyn) {
                bool uni = f->grp.full ||
                           (nAgents > 0 && f->grp.mask == AgentSet((1u << nAgents) - 1));
                return uni && check_lang(f->lhs, lang, nAgents);
            }
            return false;
    }
    return false;
}

}  // namespace

bool in_language(const FormulaPtr& f, Language lang, int nAgents) {
    return check_lang(f, lang, nAgents);
}

FormulaPtr expand_kb(const FormulaPtr& f) {
    switch (f->kind) {
        case Kind::Atom:
            return f;
        case Kind::Not:
            return Formula::mk_not(expand_kb(f->lhs));
        case Kind::And:
            return Formula::mk_and(expand_kb(f->lhs), expand_kb(f->rhs));
        case Kind::Box:
            return Formula::mk_box(f->grp, expand_kb(f->lhs));
        case Kind::Forall:
            return Formula::mk_forall(f->grp, expand_kb(f->lhs));
        case Kind::Believe: {
            FormulaPtr g = expand_kb(f->lhs);
            return Formula::mk_forall(f->grp, Formula::mk_dia(f->grp, Formula::mk_box(f->grp, g)));
        }
        case Kind::Know: {
            FormulaPtr g = expand_kb(f->lhs);
            return Formula::mk_and(
                Formula::mk_box(f->grp, g),
                Formula::mk_forall(f->grp, Formula::mk_dia(f->grp, Formula::mk_box(f->grp, g))));
        }
        case Kind::Share:
            throw std::invalid_argument("expand_kb: announcement modality present; reduce first");
    }
    throw std::logic_error("unreachable");
}

namespace {

// J+I: absorb the announcing group when it meets J.
Group bump(const Group& j, const Group& i) {
    if (j.full || i.full) {
        // a non-empty group always meets the universe
        return Group{true, 0};
    }
    if (j.mask & i.mask) return Group{false, AgentSet(j.mask | i.mask)};
    return j;
}

FormulaPtr push_share(const Group& ann, const FormulaPtr& f, DynSystem sys);

FormulaPtr reduce(const FormulaPtr& f, DynSystem sys) {
    switch (f->kind) {
        case Kind::Atom:
            return f;
        case Kind::Not:
            return Formula::mk_not(reduce(f->lhs, sys));
        case Kind::And:
            return Formula::mk_and(reduce(f->lhs, sys), reduce(f->rhs, sys));
        case Kind::Box:
            if (sys == DynSystem::KBDyn)
                throw std::invalid_argument("reduce_dynamic: Box/Forall not in the K/B system");
            return Formula::mk_box(f->grp, reduce(f->lhs, sys));
        case Kind::Forall:
            if (sys == DynSystem::KBDyn)
                throw std::invalid_argument("reduce_dynamic: Box/Forall not in the K/B system");
            return Formula::mk_forall(f->grp, reduce(f->lhs, sys));
        case Kind::Know:
            if (sys == DynSystem::EvDyn)
                throw std::invalid_argument("reduce_dynamic: K/B not in the evidence system");
            return Formula::mk_know(f->grp, reduce(f->lhs, sys));
        case Kind::Believe:
            if (sys == DynSystem::EvDyn)
                throw std::invalid_argument("reduce_dynamic: K/B not in the evidence system");
            return Formula::mk_believe(f->grp, reduce(f->lhs, sys));
        case Kind::Share: {
            if (sys == DynSystem::KBDyn && !f->grp.full)
                throw std::invalid_argument(
                    "reduce_dynamic: only whole-universe announcements in the K/B system");
            FormulaPtr inner = reduce(f->lhs, sys);  // innermost first
            return push_share(f->grp, inner, sys);
        }
    }
    throw std::logic_error("unreachable");
}

FormulaPtr push_share(const Group& ann, const FormulaPtr& f, DynSystem sys) {
    switch (f->kind) {
        case Kind::Atom:
            return f;
        case Kind::Not:
            return Formula::mk_not(push_share(ann, f->lhs, sys));
        case Kind::And:
            return Formula::mk_and(push_share(ann, f->lhs, sys), push_share(ann, f->rhs, sys));
        case Kind::Box:
            return Formula::mk_box(bump(f->grp, ann), push_share(ann, f->lhs, sys));
        case Kind::Forall:
            return Formula::mk_forall(bump(f->grp, ann), push_share(ann, f->lhs, sys));
        case Kind::Know:
            return Formula::mk_know(Group{true, 0}, push_share(ann, f->lhs, sys));
        case Kind::Believe:
            return Formula::mk_believe(Group{true, 0}, push_share(ann, f->lhs, sys));
        case Kind::Share:
            throw std::logic_error("push_share hit an unreduced announcement");
    }
    throw std::logic_error("unreachable");
}

}  // namespace

FormulaPtr reduce_dynamic(const FormulaPtr& f, DynSystem sys) { return reduce(f, sys); }

FormulaPtr single_negation(const FormulaPtr& f) {
    if (f->kind == Kind::Not) return f->lhs;
    return Formula::mk_not(f);
}

namespace {

Group concrete(AgentSet m) { return Group{false, m}; }

// peel a possibly-negated universal: returns {I, psi} for Forall_I psi or
// ~Forall_I psi, flagging the negation
struct PeeledForall {
    bool is = false, neg = false;
    AgentSet grp = 0;
    FormulaPtr body;
};

PeeledForall peel_forall(const FormulaPtr& f) {
    PeeledForall r;
    const Formula* g = f.get();
    if (g->kind == Kind::Not && g->lhs->kind == Kind::Forall) {
        r.is = true;
        r.neg = true;
        r.grp = g->lhs->grp.mask;
        r.body = g->lhs->lhs;
    } else if (g->kind == Kind::Forall) {
        r.is = true;
        r.grp = g->grp.mask;
        r.body = g->lhs;
    }
    return r;
}

}  // namespace

FormulaSet closure_set(const FormulaPtr& f0, int nAgents) {
    if (nAgents < 1 || nAgents > kMaxAgents) throw std::invalid_argument("agent universe out of range");
    AgentSet all = AgentSet((1u << nAgents) - 1);

    // resolve {A} to a concrete group first
    struct Resolver {
        AgentSet all;
        FormulaPtr run(const FormulaPtr& f) {
            switch (f->kind) {
                case Kind::Atom:
                    return f;
                case Kind::Not:
                    return Formula::mk_not(run(f->lhs));
                case Kind::And:
                    return Formula::mk_and(run(f->lhs), run(f->rhs));
                case Kind::Box:
                    return Formula::mk_box(fix(f->grp), run(f->lhs));
                case Kind::Forall:
                    return Formula::mk_forall(fix(f->grp), run(f->lhs));
                default:
                    throw std::invalid_argument(
                        "closure_set expects a static evidence formula");
            }
        }
        Group fix(const Group& g) {
            Group r = g.full ? Group{false, all} : g;
            if (r.mask & ~all) throw std::invalid_argument("group outside agent universe");
            return r;
        }
    } resolver{all};

    FormulaSet phi;
    std::vector<FormulaPtr> work;
    auto push = [&](const FormulaPtr& f) {
        if (phi.insert(f).second) work.push_back(f);
    };
    push(resolver.run(f0));

    while (!work.empty()) {
        FormulaPtr f = work.back();
        work.pop_back();

        if (f->lhs) push(f->lhs);
        if (f->rhs) push(f->rhs);
        push(single_negation(f));

        if (f->kind == Kind::Box) {
            // lift the group along strict inclusions
            AgentSet j = f->grp.mask;
            for (AgentSet i = 1; i <= all; ++i)
                if ((j & ~i) == 0 && i != j && (i & ~all) == 0)
                    push(Formula::mk_box(concrete(i), f->lhs));
        }

        PeeledForall pf = peel_forall(f);
        if (pf.is && !pf.neg) {
            AgentSet j = pf.grp;
            for (AgentSet i = 1; i <= all; ++i)
                if ((j & ~i) == 0 && i != j && (i & ~all) == 0)
                    push(Formula::mk_forall(concrete(i), pf.body));
            push(Formula::mk_box(concrete(j), f));
            push(Formula::mk_box(concrete(j), f->lhs));
        }
        if (pf.is && pf.neg) {
            push(Formula::mk_box(concrete(pf.grp), f));
        }
    }
    return phi;
}

}  // namespace topoevid
