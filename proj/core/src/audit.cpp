#include "topoevid/audit.hpp"

#include <functional>
#include <stdexcept>

#include "topoevid/representation.hpp"
#include "topoevid/semantics.hpp"

namespace topoevid {

Vocab standard_vocab(int nAtoms, int nAgents) {
    static const char* atom_names[] = {"p", "q", "r", "u", "w"};
    static const char* agent_names[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
    Vocab v;
    for (int i = 0; i < nAtoms; ++i) v.atoms.push_back(atom_names[i % 5]);
    for (int i = 0; i < nAgents && i < kMaxAgents; ++i) v.agents.push_back(agent_names[i]);
    return v;
}

namespace {

Partition random_partition(Rng& rng, int n) {
    int k = 1 + rng.below(n);
    std::vector<Mask> cells(k, 0);
    for (int x = 0; x < n; ++x) cells[rng.below(k)] |= Mask{1} << x;
    std::vector<Mask> nonempty;
    for (Mask c : cells)
        if (c) nonempty.push_back(c);
    return make_partition(n, nonempty);
}

Rel random_equivalence(Rng& rng, int n) {
    Partition p = random_partition(rng, n);
    Rel r = Rel::empty(n);
    for (int x = 0; x < n; ++x) {
        Mask c = p.cell_of(x);
        for (int y = 0; y < n; ++y)
            if ((c >> y) & 1) r.add(x, y);
    }
    return r;
}

// random preorder inside the given preorder/equivalence
Rel random_sub_preorder(Rng& rng, const Rel& bound) {
    Rel r = Rel::identity(bound.n);
    for (int s = 0; s < bound.n; ++s)
        for (int t = bound.row[s].next(0); t != -1; t = bound.row[s].next(t + 1))
            if (rng.chance(0.35)) r.add(s, t);
    for (int s = 0; s < bound.n; ++s) r.row[s] &= bound.row[s] | Bits::from_mask(Mask{1} << s, bound.n);
    Rel c = (r & bound).transitive_closure();
    return c;
}

}  // namespace

TopoEModel random_topo_model(Rng& rng, int maxCarrier, int maxAgents, int nAtoms) {
    TopoEModel m;
    m.carrier = 1 + rng.below(maxCarrier);
    m.agents = 1 + rng.below(maxAgents);
    Mask x = full_mask(m.carrier);
    for (int i = 0; i < m.agents; ++i) {
        Partition p = random_partition(rng, m.carrier);
        std::vector<Mask> sub(p.cells);
        int extra = rng.below(4);
        for (int k = 0; k < extra; ++k) {
            Mask s = rng.submask(x);
            if (s) sub.push_back(s);
        }
        m.part.push_back(p);
        m.topo.push_back(generate_topology(sub, m.carrier));
    }
    Vocab v = standard_vocab(nAtoms, 1);
    for (int a = 0; a < nAtoms; ++a) m.valuation[v.atoms[a]] = rng.submask(x);
    return m;
}

RelationalEvidenceModel random_rel_model(Rng& rng, int maxCarrier, int maxAgents, int nAtoms) {
    RelationalEvidenceModel m;
    m.carrier = 1 + rng.below(maxCarrier);
    m.agents = 1 + rng.below(maxAgents);
    for (int i = 0; i < m.agents; ++i) {
        Rel sim = random_equivalence(rng, m.carrier);
        m.sim.push_back(sim);
        m.leq.push_back(random_sub_preorder(rng, sim));
    }
    Vocab v = standard_vocab(nAtoms, 1);
    for (int a = 0; a < nAtoms; ++a)
        m.valuation.emplace(v.atoms[a], Bits::from_mask(rng.submask(full_mask(m.carrier)), m.carrier));
    return m;
}

EvPseudoModel random_ev_pseudo(Rng& rng, int maxCarrier, int maxAgents, int nAtoms, bool ia_only) {
    EvPseudoModel m;
    m.carrier = 1 + rng.below(maxCarrier);
    m.agents = 1 + rng.below(maxAgents);
    m.fragment_ia = ia_only;
    AgentSet all = m.universe();
    m.rel.assign(std::size_t(all) + 1, std::nullopt);

    auto build_group = [&](AgentSet g) {
        // bound by every proper carried sub-group (anti-monotonicity)
        Rel leq_bound = Rel::total(m.carrier);
        Rel sim_bound = Rel::total(m.carrier);
        for (AgentSet j = 1; j < g; ++j)
            if ((j & ~g) == 0 && m.rel[j].has_value()) {
                leq_bound = leq_bound & m.rel[j]->leq;
                sim_bound = sim_bound & m.rel[j]->sim;
            }
        Rel leq = random_sub_preorder(rng, leq_bound);
        Rel sim_seed = Rel::identity(m.carrier);
        for (int s = 0; s < m.carrier; ++s)
            for (int t = sim_bound.row[s].next(0); t != -1; t = sim_bound.row[s].next(t + 1))
                if (rng.chance(0.4)) sim_seed.add(s, t);
        Rel sim = ((sim_seed & sim_bound) | leq).equivalence_closure();
        m.rel[g] = GroupRelations{leq, sim};
    };

    for (int sz = 1; sz <= m.agents; ++sz)
        for (AgentSet g = 1; g <= all; ++g) {
            if (__builtin_popcount(g) != sz) continue;
            if (ia_only && sz != 1 && g != all) continue;
            build_group(g);
        }

    Vocab v = standard_vocab(nAtoms, 1);
    for (int a = 0; a < nAtoms; ++a)
        m.valuation.emplace(v.atoms[a], Bits::from_mask(rng.submask(full_mask(m.carrier)), m.carrier));
    ValidationReport rep = validate_ev_pseudo(m);
    if (!rep.ok()) throw std::logic_error("random pseudo-model failed validation: " + rep.text());
    return m;
}

KBPseudoModel random_kb_pseudo(Rng& rng, int maxCarrier, int maxAgents, int nAtoms) {
    return kb_from_evidence(random_ev_pseudo(rng, maxCarrier, maxAgents, nAtoms, true));
}

FormulaPtr random_formula(Rng& rng, const FormulaGenOpts& o) {
    AgentSet all = AgentSet((1u << o.nAgents) - 1);
    auto rgroup = [&]() -> Group {
        if (o.alpha_only) {
            if (rng.chance(0.3)) return Group{true, 0};
            return Group{false, AgentSet(AgentSet{1} << rng.below(o.nAgents))};
        }
        if (rng.chance(0.2)) return Group{true, 0};
        return Group{false, AgentSet(1 + rng.below(all))};
    };
    auto ralpha = [&]() -> Group {
        if (rng.chance(0.3)) return Group{true, 0};
        return Group{false, AgentSet(AgentSet{1} << rng.below(o.nAgents))};
    };
    std::function<FormulaPtr(int)> gen = [&](int d) -> FormulaPtr {
        int modal_kinds = (o.ev ? 2 : 0) + (o.kb ? 2 : 0) + (o.share ? 1 : 0);
        if (d == 0 || modal_kinds == 0 || rng.chance(0.25))
            return Formula::mk_atom(rng.below(o.nAtoms));
        int c = rng.below(2 + modal_kinds);
        if (c == 0) return Formula::mk_not(gen(d));
        if (c == 1) return Formula::mk_and(gen(d - 1), gen(d - 1));
        c -= 2;
        if (o.ev) {
            if (c == 0) return Formula::mk_box(rgroup(), gen(d - 1));
            if (c == 1) return Formula::mk_forall(rgroup(), gen(d - 1));
            c -= 2;
        }
        if (o.kb) {
            if (c == 0) return Formula::mk_know(ralpha(), gen(d - 1));
            if (c == 1) return Formula::mk_believe(ralpha(), gen(d - 1));
            c -= 2;
        }
        Group g = o.share_universe_only ? Group{true, 0} : rgroup();
        return Formula::mk_share(g, gen(d - 1));
    };
    return gen(o.maxDepth);
}

namespace {

using F = FormulaPtr;

F impl(F a, F b) { return Formula::mk_implies(std::move(a), std::move(b)); }
F iff(F a, F b) { return Formula::mk_iff(std::move(a), std::move(b)); }

// the four-state, two-agent model whose pooled evidence defeats group belief;
// seeds the counterexample hunt for the expected-invalid schemes
TopoEModel contrast_model() {
    TopoEModel m;
    m.carrier = 4;
    m.agents = 2;
    Mask x = full_mask(4);
    m.part.push_back(make_partition(4, {x}));
    m.part.push_back(make_partition(4, {x}));
    m.topo.push_back(generate_topology({0b1010, 0b1100, x}, 4));
    m.topo.push_back(generate_topology({0b0011, 0b0101, x}, 4));
    m.valuation["p"] = 0b1011;
    m.valuation["q"] = 0b0100;
    return m;
}

struct InstCtx {
    Rng& rng;
    int nAgents;
    int instance;  // 0-based index within the model
    FormulaGenOpts fo;

    F f() { return random_formula(rng, fo); }
    F f_or_p() { return instance == 0 ? Formula::mk_atom(0) : f(); }
    Group grp() { return Group{false, AgentSet(1 + rng.below((1 << nAgents) - 1))}; }
    Group agent() { return Group{false, AgentSet(AgentSet{1} << rng.below(nAgents))}; }
    Group alpha() { return rng.chance(0.4) ? Group{true, 0} : agent(); }
    Group uni() { return Group{true, 0}; }
    // J subset of I, both non-empty
    std::pair<Group, Group> nested() {
        Group i = grp();
        AgentSet j = 0;
        while (j == 0) j = AgentSet(i.mask & AgentSet(1 + rng.below((1 << nAgents) - 1)));
        return {Group{false, j}, i};
    }
    Group bump(const Group& j, const Group& i) {
        if (j.full || i.full) return Group{true, 0};
        if (j.mask & i.mask) return Group{false, AgentSet(j.mask | i.mask)};
        return j;
    }
};

struct Scheme {
    std::string name;
    int sem;  // 0 topo, 1 relational, 2 ev pseudo, 3 kb pseudo
    bool expect_valid = true;
    std::function<F(InstCtx&)> make;
};

std::vector<Scheme> build_schemes() {
    using K = Formula;
    std::vector<Scheme> out;
    auto add = [&](std::string name, int sem, bool valid, std::function<F(InstCtx&)> mk) {
        out.push_back({std::move(name), sem, valid, std::move(mk)});
    };

    // S4 box / S5 universal / monotonicity / inclusion, on all three
    // evidence semantics
    for (int sem : {0, 1, 2}) {
        std::string p = sem == 0 ? "topo/" : (sem == 1 ? "rel/" : "pseudo/");
        add(p + "box-K", sem, true, [](InstCtx& c) {
            Group g = c.grp();
            F a = c.f(), b = c.f();
            return impl(K::mk_box(g, impl(a, b)), impl(K::mk_box(g, a), K::mk_box(g, b)));
        });
        add(p + "box-T", sem, true, [](InstCtx& c) {
            Group g = c.grp();
            F a = c.f();
            return impl(K::mk_box(g, a), a);
        });
        add(p + "box-4", sem, true, [](InstCtx& c) {
            Group g = c.grp();
            F a = c.f();
            return impl(K::mk_box(g, a), K::mk_box(g, K::mk_box(g, a)));
        });
        add(p + "forall-K", sem, true, [](InstCtx& c) {
            Group g = c.grp();
            F a = c.f(), b = c.f();
            return impl(K::mk_forall(g, impl(a, b)),
                        impl(K::mk_forall(g, a), K::mk_forall(g, b)));
        });
        add(p + "forall-T", sem, true, [](InstCtx& c) {
            Group g = c.grp();
            F a = c.f();
            return impl(K::mk_forall(g, a), a);
        });
        add(p + "forall-4", sem, true, [](InstCtx& c) {
            Group g = c.grp();
            F a = c.f();
            return impl(K::mk_forall(g, a), K::mk_forall(g, K::mk_forall(g, a)));
        });
        add(p + "forall-5", sem, true, [](InstCtx& c) {
            Group g = c.grp();
            F a = c.f();
            return impl(K::mk_not(K::mk_forall(g, a)),
                        K::mk_forall(g, K::mk_not(K::mk_forall(g, a))));
        });
        add(p + "box-mono", sem, true, [](InstCtx& c) {
            auto [j, i] = c.nested();
            F a = c.f();
            return impl(K::mk_box(j, a), K::mk_box(i, a));
        });
        add(p + "forall-mono", sem, true, [](InstCtx& c) {
            auto [j, i] = c.nested();
            F a = c.f();
            return impl(K::mk_forall(j, a), K::mk_forall(i, a));
        });
        add(p + "inclusion", sem, true, [](InstCtx& c) {
            Group g = c.grp();
            F a = c.f();
            return impl(K::mk_forall(g, a), K::mk_box(g, a));
        });
    }

    // knowledge/belief schemes on topo models and on companion pseudo-models
    for (int sem : {0, 3}) {
        std::string p = sem == 0 ? "topo/" : "kb/";
        add(p + "K-normal", sem, true, [](InstCtx& c) {
            Group g = c.alpha();
            F a = c.f(), b = c.f();
            return impl(K::mk_know(g, impl(a, b)), impl(K::mk_know(g, a), K::mk_know(g, b)));
        });
        add(p + "B-normal", sem, true, [](InstCtx& c) {
            Group g = c.alpha();
            F a = c.f(), b = c.f();
            return impl(K::mk_believe(g, impl(a, b)),
                        impl(K::mk_believe(g, a), K::mk_believe(g, b)));
        });
        add(p + "K-T", sem, true, [](InstCtx& c) {
            Group g = c.alpha();
            F a = c.f();
            return impl(K::mk_know(g, a), a);
        });
        add(p + "K-4", sem, true, [](InstCtx& c) {
            Group g = c.alpha();
            F a = c.f();
            return impl(K::mk_know(g, a), K::mk_know(g, K::mk_know(g, a)));
        });
        add(p + "B-consistent", sem, true, [](InstCtx& c) {
            Group g = c.alpha();
            F a = c.f();
            return impl(K::mk_believe(g, a), K::mk_not(K::mk_believe(g, K::mk_not(a))));
        });
        add(p + "B-pos-intro", sem, true, [](InstCtx& c) {
            Group g = c.alpha();
            F a = c.f();
            return impl(K::mk_believe(g, a), K::mk_know(g, K::mk_believe(g, a)));
        });
        add(p + "B-neg-intro", sem, true, [](InstCtx& c) {
            Group g = c.alpha();
            F a = c.f();
            return impl(K::mk_not(K::mk_believe(g, a)),
                        K::mk_know(g, K::mk_not(K::mk_believe(g, a))));
        });
        add(p + "K-implies-B", sem, true, [](InstCtx& c) {
            Group g = c.alpha();
            F a = c.f();
            return impl(K::mk_know(g, a), K::mk_believe(g, a));
        });
        add(p + "full-belief", sem, true, [](InstCtx& c) {
            Group g = c.alpha();
            F a = c.f();
            return impl(K::mk_believe(g, a), K::mk_believe(g, K::mk_know(g, a)));
        });
        add(p + "super-intro", sem, true, [](InstCtx& c) {
            Group i = c.agent();
            F a = c.f();
            return impl(K::mk_believe(i, a), K::mk_know(c.uni(), K::mk_believe(i, a)));
        });
        add(p + "mutual-knowledge", sem, true, [](InstCtx& c) {
            Group i = c.agent();
            F a = c.f();
            return impl(K::mk_and(K::mk_know(i, a), K::mk_believe(c.uni(), a)),
                        K::mk_know(c.uni(), a));
        });
        add(p + "belief-dependence", sem, true, [](InstCtx& c) {
            F conj_k = nullptr, conj_f = nullptr;
            for (int i = 0; i < c.nAgents; ++i) {
                F fi = c.f();
                Group gi{false, AgentSet(AgentSet{1} << i)};
                F ki = K::mk_know(gi, fi);
                conj_k = conj_k ? K::mk_and(conj_k, ki) : ki;
                conj_f = conj_f ? K::mk_and(conj_f, fi) : fi;
            }
            return impl(conj_k, K::mk_pos_believe(c.uni(), conj_f));
        });
    }

    // generalized group versions, topo only
    add("topo/gen-super-intro", 0, true, [](InstCtx& c) {
        auto [j, i] = c.nested();
        F a = c.f();
        return impl(Formula::mk_believe(j, a), Formula::mk_know(i, Formula::mk_believe(j, a)));
    });
    add("topo/gen-mutual-knowledge", 0, true, [](InstCtx& c) {
        auto [j, i] = c.nested();
        F a = c.f();
        return impl(Formula::mk_and(Formula::mk_know(j, a), Formula::mk_believe(i, a)),
                    Formula::mk_know(i, a));
    });
    add("topo/gen-belief-dependence", 0, true, [](InstCtx& c) {
        Group i = c.grp();
        F conj_k = nullptr, conj_f = nullptr;
        for (AgentSet j = 1; j <= i.mask; ++j) {
            if (j & ~i.mask) continue;
            F fj = c.f();
            F kj = Formula::mk_know(Group{false, j}, fj);
            conj_k = conj_k ? Formula::mk_and(conj_k, kj) : kj;
            conj_f = conj_f ? Formula::mk_and(conj_f, fj) : fj;
        }
        return impl(conj_k, Formula::mk_pos_believe(i, conj_f));
    });

    // announcement reduction laws, topo only
    add("topo/share-atom", 0, true, [](InstCtx& c) {
        Group i = c.grp();
        F p = Formula::mk_atom(c.rng.below(c.fo.nAtoms));
        return iff(Formula::mk_share(i, p), p);
    });
    add("topo/share-not", 0, true, [](InstCtx& c) {
        Group i = c.grp();
        F a = c.f();
        return iff(Formula::mk_share(i, Formula::mk_not(a)),
                   Formula::mk_not(Formula::mk_share(i, a)));
    });
    add("topo/share-and", 0, true, [](InstCtx& c) {
        Group i = c.grp();
        F a = c.f(), b = c.f();
        return iff(Formula::mk_share(i, Formula::mk_and(a, b)),
                   Formula::mk_and(Formula::mk_share(i, a), Formula::mk_share(i, b)));
    });
    add("topo/share-box", 0, true, [](InstCtx& c) {
        Group i = c.grp(), j = c.grp();
        F a = c.f();
        return iff(Formula::mk_share(i, Formula::mk_box(j, a)),
                   Formula::mk_box(c.bump(j, i), Formula::mk_share(i, a)));
    });
    add("topo/share-forall", 0, true, [](InstCtx& c) {
        Group i = c.grp(), j = c.grp();
        F a = c.f();
        return iff(Formula::mk_share(i, Formula::mk_forall(j, a)),
                   Formula::mk_forall(c.bump(j, i), Formula::mk_share(i, a)));
    });
    add("topo/share-know", 0, true, [](InstCtx& c) {
        Group al = c.alpha();
        F a = c.f();
        return iff(Formula::mk_share(c.uni(), Formula::mk_know(al, a)),
                   Formula::mk_know(c.uni(), Formula::mk_share(c.uni(), a)));
    });
    add("topo/share-believe", 0, true, [](InstCtx& c) {
        Group al = c.alpha();
        F a = c.f();
        return iff(Formula::mk_share(c.uni(), Formula::mk_believe(al, a)),
                   Formula::mk_believe(c.uni(), Formula::mk_share(c.uni(), a)));
    });

    // deliberately invalid schemes: pooling evidence does not lift
    // single-agent knowledge, nor force group belief
    add("topo/INVALID/know-mono", 0, false, [](InstCtx& c) {
        Group i = c.agent();
        F a = c.f_or_p();
        return impl(Formula::mk_know(i, a), Formula::mk_know(c.uni(), a));
    });
    add("topo/INVALID/everyone-knows-group-believes", 0, false, [](InstCtx& c) {
        F a = c.f_or_p();
        F conj = nullptr;
        for (int i = 0; i < c.nAgents; ++i) {
            F ki = Formula::mk_know(Group{false, AgentSet(AgentSet{1} << i)}, a);
            conj = conj ? Formula::mk_and(conj, ki) : ki;
        }
        return impl(conj, Formula::mk_believe(c.uni(), a));
    });

    return out;
}

}  // namespace

AuditReport axiom_audit(std::uint64_t seed, int nModels, int instancesPerModel) {
    Rng rng(seed);
    const int nAtoms = 2;
    Vocab v = standard_vocab(nAtoms, kMaxAgents);
    std::vector<Scheme> schemes = build_schemes();

    AuditReport rep;
    rep.schemes.reserve(schemes.size());
    for (const auto& s : schemes) rep.schemes.push_back({s.name, s.expect_valid, 0, 0, "", });

    auto run_pass = [&](int sem, auto&& eval_full, int nAgents, auto&& describe) {
        for (std::size_t si = 0; si < schemes.size(); ++si) {
            if (schemes[si].sem != sem) continue;
            SchemeResult& r = rep.schemes[si];
            for (int k = 0; k < instancesPerModel; ++k) {
                FormulaGenOpts fo;
                fo.nAtoms = nAtoms;
                fo.nAgents = nAgents;
                fo.kb = (sem == 0 || sem == 3);
                fo.ev = (sem != 3);
                fo.alpha_only = (sem == 3);
                InstCtx c{rng, nAgents, k, fo};
                F inst = schemes[si].make(c);
                ++r.instances;
                if (!eval_full(inst)) {
                    ++r.failures;
                    if (r.first_counterexample.empty())
                        r.first_counterexample = print(inst, v) + " on " + describe();
                }
            }
        }
    };

    for (int mi = 0; mi < nModels; ++mi) {
        ++rep.models;
        TopoEModel m = (mi == 0) ? contrast_model() : random_topo_model(rng, 4, 3, nAtoms);
        auto ev = [&](const F& f) {
            Bits e = eval_topo(m, f, v).extension;
            return e == Bits::all(m.carrier);
        };
        auto de = [&] { return "topo model #" + std::to_string(mi); };
        run_pass(0, ev, m.agents, de);
    }
    for (int mi = 0; mi < nModels; ++mi) {
        RelationalEvidenceModel m = random_rel_model(rng, 4, 3, nAtoms);
        auto ev = [&](const F& f) {
            return eval_relational(m, f, v).extension == Bits::all(m.carrier);
        };
        auto de = [&] { return "relational model #" + std::to_string(mi); };
        run_pass(1, ev, m.agents, de);
    }
    for (int mi = 0; mi < nModels; ++mi) {
        EvPseudoModel m = random_ev_pseudo(rng, 4, 3, nAtoms, false);
        auto ev = [&](const F& f) {
            return eval_ev_pseudo(m, f, v).extension == Bits::all(m.carrier);
        };
        auto de = [&] { return "pseudo-model #" + std::to_string(mi); };
        run_pass(2, ev, m.agents, de);
    }
    for (int mi = 0; mi < nModels; ++mi) {
        KBPseudoModel m = random_kb_pseudo(rng, 4, 3, nAtoms);
        auto ev = [&](const F& f) {
            return eval_kb_pseudo(m, f, v).extension == Bits::all(m.carrier);
        };
        auto de = [&] { return "companion model #" + std::to_string(mi); };
        run_pass(3, ev, m.agents, de);
    }
    return rep;
}

}  // namespace topoevid
