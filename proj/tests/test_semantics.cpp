#include <doctest.h>

#include "topoevid/audit.hpp"
#include "topoevid/parser.hpp"
#include "topoevid/semantics.hpp"
#include "topoevid/serialize.hpp"
#include "topoevid/transform.hpp"

using namespace topoevid;

static const Mask W1 = 1, W2 = 2, W3 = 4, W4 = 8;

static ModelDoc fixture_doc() {
    return load_model(std::string(FIXTURE_DIR) + "/example1.json");
}

static Mask topo_ext(const TopoEModel& m, const std::string& s, Vocab& v) {
    return eval_topo(m, parse_formula(s, v), v).extension.to_mask();
}

TEST_CASE("extensions on the running example") {
    ModelDoc doc = fixture_doc();
    const TopoEModel& m = doc.topo();
    Vocab v = doc.make_vocab();
    CHECK(topo_ext(m, "p", v) == (W1 | W2 | W4));
    CHECK(topo_ext(m, "Box{a} p", v) == (W2 | W4));
    CHECK(topo_ext(m, "K{a} p", v) == (W2 | W4));
    CHECK(topo_ext(m, "K{b} p", v) == (W1 | W2));
    CHECK(topo_ext(m, "K{a} p & K{b} p", v) == W2);
    CHECK(topo_ext(m, "B{A} p", v) == 0);
    CHECK(topo_ext(m, "K{A} p", v) == 0);
    CHECK(topo_ext(m, "B{a} p", v) == 15);
    CHECK(topo_ext(m, "[share{a,b}] B{A} p", v) == 0);
}

TEST_CASE("operator identities on random models") {
    Rng rng(41);
    for (int it = 0; it < 300; ++it) {
        TopoEModel m = random_topo_model(rng, 5, 3, 2);
        REQUIRE(validate_topo(m).ok());
        Mask x = full_mask(m.carrier);
        AgentSet grp = AgentSet(1 + rng.below((1 << m.agents) - 1));
        Mask p = rng.submask(x);
        OpTable t = op_table(m, grp, p);
        // global quantifier under the set-level box; knowledge under belief
        REQUIRE(subset(t.forall, t.box));
        REQUIRE(subset(t.know, t.believe));
        // belief unfolds through the soft-evidence modalities
        REQUIRE(t.believe == op_table(m, grp, op_table(m, grp, t.box).dia).forall);
        // knowledge is true belief in the box sense
        REQUIRE(t.know == (t.box & t.believe));
        // belief is possible knowledge of knowledge
        REQUIRE(t.believe == op_table(m, grp, t.know).pos_know);
        // knowledge is interior in the dense-open subfamily
        GroupStructure g = group_structure(m, grp);
        Topology d = dense_open(g.topo, g.part);
        REQUIRE(t.know == d.interior(p));
        // dualities
        REQUIRE(t.dia == (x & ~op_table(m, grp, x & ~p).box));
        REQUIRE(t.pos_know == (x & ~op_table(m, grp, x & ~p).know));
    }
}

TEST_CASE("announcement semantics agrees with the reduction axioms") {
    Rng rng(43);
    Vocab v = standard_vocab(2, 3);
    for (int it = 0; it < 250; ++it) {
        TopoEModel m = random_topo_model(rng, 5, 3, 2);
        FormulaGenOpts o;
        o.maxDepth = 3;
        o.nAtoms = 2;
        o.nAgents = m.agents;
        o.share = true;
        FormulaPtr f = random_formula(rng, o);
        FormulaPtr r = reduce_dynamic(f, DynSystem::EvDyn);
        REQUIRE(in_language(r, Language::EvFull));
        REQUIRE(eval_topo(m, f, v).extension == eval_topo(m, r, v).extension);
    }
}

TEST_CASE("sharing commutes with evaluation of static formulas") {
    Rng rng(47);
    Vocab v = standard_vocab(2, 3);
    for (int it = 0; it < 200; ++it) {
        TopoEModel m = random_topo_model(rng, 5, 3, 2);
        AgentSet grp = AgentSet(1 + rng.below((1 << m.agents) - 1));
        FormulaGenOpts o;
        o.maxDepth = 3;
        o.nAtoms = 2;
        o.nAgents = m.agents;
        FormulaPtr f = random_formula(rng, o);
        FormulaPtr shared = Formula::mk_share(Group{false, grp}, f);
        TopoEModel u = share_update(m, grp);
        REQUIRE(eval_topo(m, shared, v).extension == eval_topo(u, f, v).extension);
    }
}

TEST_CASE("relational evaluation matches the box/forall table") {
    ModelDoc doc = fixture_doc();
    RelationalEvidenceModel r = rel_of_topo(doc.topo());
    Vocab v = doc.make_vocab();
    CHECK(eval_relational(r, parse_formula("Box{a} p", v), v).extension.to_mask() == (W2 | W4));
    CHECK(eval_relational(r, parse_formula("Forall{a} p", v), v).extension.to_mask() == 0);
    CHECK(eval_relational(r, parse_formula("Box{a,b} p", v), v).extension.to_mask() ==
          (W1 | W2 | W4));
    CHECK_THROWS_AS(eval_relational(r, parse_formula("K{a} p", v), v), std::invalid_argument);
}

TEST_CASE("missing atoms are rejected, not defaulted") {
    ModelDoc doc = fixture_doc();
    Vocab v = doc.make_vocab();
    FormulaPtr f = parse_formula("q", v);
    CHECK_THROWS_AS(eval_topo(doc.topo(), f, v), std::invalid_argument);
}

TEST_CASE("traces list subformula extensions innermost first") {
    ModelDoc doc = fixture_doc();
    Vocab v = doc.make_vocab();
    FormulaPtr f = parse_formula("~Box{a} p", v);
    EvalResult r = eval_topo(doc.topo(), f, v, true);
    REQUIRE(r.trace.size() == 3);
    CHECK(print(r.trace[0].formula, v) == "p");
    CHECK(r.trace[0].extension.to_mask() == (W1 | W2 | W4));
    CHECK(r.trace[1].extension.to_mask() == (W2 | W4));
    CHECK(r.trace.back().extension == r.extension);
}
