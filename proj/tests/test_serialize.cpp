#include <doctest.h>

#include "topoevid/audit.hpp"
#include "topoevid/representation.hpp"
#include "topoevid/serialize.hpp"

using namespace topoevid;

TEST_CASE("the example fixture loads") {
    ModelDoc doc = load_model(std::string(FIXTURE_DIR) + "/example1.json");
    CHECK(doc.kind == ModelKind::Topo);
    CHECK(doc.states == std::vector<std::string>{"w1", "w2", "w3", "w4"});
    CHECK(doc.agents == std::vector<std::string>{"a", "b"});
    CHECK(doc.state_index("w3") == 2);
    CHECK(doc.state_index("w9") == -1);
    CHECK(doc.validate().ok());
    Vocab v = doc.make_vocab();
    CHECK(v.find_agent("b") == 1);
}

TEST_CASE("dump and parse round trip every model kind") {
    Rng rng(79);
    for (int it = 0; it < 40; ++it) {
        TopoEModel t = random_topo_model(rng, 5, 3, 2);
        ModelDoc d1 = wrap_topo(t);
        ModelDoc r1 = parse_model(dump_model(d1));
        CHECK(r1.topo().valuation == t.valuation);
        for (int i = 0; i < t.agents; ++i) {
            CHECK(r1.topo().topo[i].opens == t.topo[i].opens);
            CHECK(r1.topo().part[i].cells == t.part[i].cells);
        }

        RelationalEvidenceModel m = random_rel_model(rng, 5, 3, 2);
        ModelDoc d2 = wrap_relational(m);
        ModelDoc r2 = parse_model(dump_model(d2));
        for (int i = 0; i < m.agents; ++i) {
            CHECK(r2.relational().leq[i] == m.leq[i]);
            CHECK(r2.relational().sim[i] == m.sim[i]);
        }

        EvPseudoModel s = random_ev_pseudo(rng, 4, 2, 2, rng.chance(0.5));
        ModelDoc d3 = wrap_relational(m);  // reuse names, then swap in the pseudo-model
        d3.kind = ModelKind::EvPseudo;
        d3.states.resize(s.carrier);
        for (int i = 0; i < s.carrier; ++i) d3.states[i] = "s" + std::to_string(i);
        d3.agents.resize(s.agents);
        for (int i = 0; i < s.agents; ++i) d3.agents[i] = std::string(1, char('a' + i));
        d3.model = s;
        ModelDoc r3 = parse_model(dump_model(d3));
        CHECK(r3.ev_pseudo().fragment_ia == s.fragment_ia);
        for (AgentSet g = 1; g <= s.universe(); ++g) {
            CHECK(r3.ev_pseudo().has_group(g) == s.has_group(g));
            if (s.has_group(g)) {
                CHECK(r3.ev_pseudo().at(g).leq == s.at(g).leq);
                CHECK(r3.ev_pseudo().at(g).sim == s.at(g).sim);
            }
        }

        KBPseudoModel kb = random_kb_pseudo(rng, 4, 2, 2);
        ModelDoc d4;
        d4.kind = ModelKind::KBPseudo;
        d4.states.resize(kb.carrier);
        for (int i = 0; i < kb.carrier; ++i) d4.states[i] = "s" + std::to_string(i);
        d4.agents.resize(kb.agents);
        for (int i = 0; i < kb.agents; ++i) d4.agents[i] = std::string(1, char('a' + i));
        d4.model = kb;
        ModelDoc r4 = parse_model(dump_model(d4));
        for (int a = 0; a < kb.alpha_count(); ++a) {
            CHECK(r4.kb_pseudo().knows[a] == kb.knows[a]);
            CHECK(r4.kb_pseudo().bel[a] == kb.bel[a]);
        }
    }
}

TEST_CASE("load errors") {
    CHECK_THROWS_AS(parse_model("not json"), LoadError);
    CHECK_THROWS_AS(parse_model("{}"), LoadError);
    CHECK_THROWS_AS(parse_model(R"({"kind":"castle","states":["s0"],"agents":["a"]})"),
                    LoadError);
    // unknown state in a valuation
    CHECK_THROWS_AS(parse_model(R"({
        "kind": "topo", "states": ["s0"], "agents": ["a"],
        "hard": {"a": [["s0"]]}, "soft": {"a": []},
        "valuation": {"p": ["s9"]}
    })"),
                    LoadError);
    // invalid model: partition cell not open
    const char* bad = R"({
        "kind": "topo", "states": ["s0", "s1"], "agents": ["a"],
        "hard": {"a": [["s0"], ["s1"]]}, "soft": {"a": []},
        "valuation": {"p": ["s0"]}
    })";
    CHECK_THROWS_AS(parse_model(bad), LoadError);
    CHECK_NOTHROW(parse_model(bad, false));
    CHECK(!parse_model(bad, false).validate().ok());
    CHECK_THROWS_AS(load_model("/nonexistent/model.json"), LoadError);
}

TEST_CASE("save and reload") {
    Rng rng(83);
    RelationalEvidenceModel m = random_rel_model(rng, 4, 2, 2);
    std::vector<std::string> names;
    for (int i = 0; i < m.agents; ++i) names.push_back("x" + std::to_string(i));
    ModelDoc d = wrap_relational(m, names);
    std::string path = "roundtrip_tmp.json";
    save_model(d, path);
    ModelDoc r = load_model(path);
    CHECK(r.agents == names);
    for (int i = 0; i < m.agents; ++i) CHECK(r.relational().leq[i] == m.leq[i]);
    std::remove(path.c_str());
}
