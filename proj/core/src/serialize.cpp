#include "topoevid/serialize.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace topoevid {

using nlohmann::json;

int ModelDoc::state_index(const std::string& name) const {
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i] == name) return int(i);
    return -1;
}

Vocab ModelDoc::make_vocab() const {
    Vocab v;
    v.agents = agents;
    return v;
}

ValidationReport ModelDoc::validate() const {
    switch (kind) {
        case ModelKind::Topo:
            return validate_topo(topo());
        case ModelKind::Relational:
            return validate_relational(relational());
        case ModelKind::EvPseudo:
            return validate_ev_pseudo(ev_pseudo());
        case ModelKind::KBPseudo:
            return validate_kb_pseudo(kb_pseudo());
    }
    return {};
}

namespace {

struct NameTable {
    std::vector<std::string> states;
    int index(const std::string& s) const {
        for (std::size_t i = 0; i < states.size(); ++i)
            if (states[i] == s) return int(i);
        throw LoadError("unknown state name: " + s);
    }
};

Mask read_state_set(const json& j, const NameTable& nt) {
    if (!j.is_array()) throw LoadError("expected an array of state names");
    Mask m = 0;
    for (const auto& e : j) m |= Mask{1} << nt.index(e.get<std::string>());
    return m;
}

Bits read_state_bits(const json& j, const NameTable& nt) {
    if (!j.is_array()) throw LoadError("expected an array of state names");
    Bits b(int(nt.states.size()));
    for (const auto& e : j) b.set(nt.index(e.get<std::string>()));
    return b;
}

Rel read_pairs(const json& j, const NameTable& nt) {
    if (!j.is_array()) throw LoadError("expected an array of state pairs");
    Rel r = Rel::empty(int(nt.states.size()));
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) throw LoadError("relation entries are pairs");
        r.add(nt.index(e[0].get<std::string>()), nt.index(e[1].get<std::string>()));
    }
    return r;
}

json write_state_set(Mask m, const NameTable& nt) {
    json a = json::array();
    for (std::size_t i = 0; i < nt.states.size(); ++i)
        if (m & (Mask{1} << i)) a.push_back(nt.states[i]);
    return a;
}

json write_state_bits(const Bits& b, const NameTable& nt) {
    json a = json::array();
    for (int i = 0; i < b.size(); ++i)
        if (b.test(i)) a.push_back(nt.states[i]);
    return a;
}

json write_pairs(const Rel& r, const NameTable& nt) {
    json a = json::array();
    for (int s = 0; s < r.n; ++s)
        for (int t = r.row[s].next(0); t != -1; t = r.row[s].next(t + 1))
            a.push_back(json::array({nt.states[s], nt.states[t]}));
    return a;
}

int agent_index(const std::vector<std::string>& agents, const std::string& name) {
    for (std::size_t i = 0; i < agents.size(); ++i)
        if (agents[i] == name) return int(i);
    throw LoadError("unknown agent name: " + name);
}

AgentSet read_group(const json& j, const std::vector<std::string>& agents) {
    AgentSet g = 0;
    for (const auto& e : j) g |= AgentSet{1} << agent_index(agents, e.get<std::string>());
    if (g == 0) throw LoadError("empty group in model file");
    return g;
}

}  // namespace

ModelDoc parse_model(const std::string& json_text, bool check_valid) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw LoadError(std::string("malformed JSON: ") + e.what());
    }
    try {
        ModelDoc doc;
        std::string kind = j.at("kind").get<std::string>();
        doc.states = j.at("states").get<std::vector<std::string>>();
        doc.agents = j.at("agents").get<std::vector<std::string>>();
        if (doc.states.empty()) throw LoadError("no states");
        if (doc.agents.empty()) throw LoadError("no agents");
        if (int(doc.agents.size()) > kMaxAgents) throw LoadError("too many agents");
        NameTable nt{doc.states};
        int n = int(doc.states.size());
        int na = int(doc.agents.size());

        if (kind == "topo") {
            if (n > kMaxCarrier) throw LoadError("carrier too large for the topo kind");
            doc.kind = ModelKind::Topo;
            TopoEModel m;
            m.carrier = n;
            m.agents = na;
            for (const auto& ag : doc.agents) {
                std::vector<Mask> cells;
                for (const auto& c : j.at("hard").at(ag)) cells.push_back(read_state_set(c, nt));
                m.part.push_back(make_partition(n, cells));
                std::vector<Mask> sub;
                for (const auto& c : j.at("soft").at(ag)) sub.push_back(read_state_set(c, nt));
                m.topo.push_back(generate_topology(sub, n));
            }
            for (const auto& [atom, set] : j.at("valuation").items())
                m.valuation[atom] = read_state_set(set, nt);
            doc.model = std::move(m);
        } else if (kind == "relational") {
            doc.kind = ModelKind::Relational;
            RelationalEvidenceModel m;
            m.carrier = n;
            m.agents = na;
            for (const auto& ag : doc.agents) {
                m.leq.push_back(read_pairs(j.at("plausibility").at(ag), nt));
                m.sim.push_back(read_pairs(j.at("hard").at(ag), nt));
            }
            for (const auto& [atom, set] : j.at("valuation").items())
                m.valuation.emplace(atom, read_state_bits(set, nt));
            doc.model = std::move(m);
        } else if (kind == "ev_pseudo") {
            doc.kind = ModelKind::EvPseudo;
            EvPseudoModel m;
            m.carrier = n;
            m.agents = na;
            std::string frag = j.value("fragment", std::string("full"));
            if (frag != "full" && frag != "iA") throw LoadError("fragment must be 'full' or 'iA'");
            m.fragment_ia = (frag == "iA");
            m.rel.assign(std::size_t(m.universe()) + 1, std::nullopt);
            for (const auto& e : j.at("groups")) {
                AgentSet g = read_group(e.at("group"), doc.agents);
                if (m.rel[g].has_value()) throw LoadError("duplicate group entry");
                m.rel[g] = GroupRelations{read_pairs(e.at("plausibility"), nt),
                                          read_pairs(e.at("hard"), nt)};
            }
            for (const auto& [atom, set] : j.at("valuation").items())
                m.valuation.emplace(atom, read_state_bits(set, nt));
            doc.model = std::move(m);
        } else if (kind == "kb_pseudo") {
            doc.kind = ModelKind::KBPseudo;
            KBPseudoModel m;
            m.carrier = n;
            m.agents = na;
            m.knows.assign(na + 1, Rel::empty(n));
            m.bel.assign(na + 1, Rel::empty(n));
            std::vector<bool> filled(na + 1, false);
            for (const auto& e : j.at("indices")) {
                std::string alpha = e.at("alpha").get<std::string>();
                int slot = (alpha == "A") ? na : agent_index(doc.agents, alpha);
                if (filled[slot]) throw LoadError("duplicate index entry");
                filled[slot] = true;
                m.knows[slot] = read_pairs(e.at("knowledge"), nt);
                m.bel[slot] = read_pairs(e.at("belief"), nt);
            }
            for (int s = 0; s <= na; ++s)
                if (!filled[s]) throw LoadError("missing index entry (per-agent and 'A' required)");
            for (const auto& [atom, set] : j.at("valuation").items())
                m.valuation.emplace(atom, read_state_bits(set, nt));
            doc.model = std::move(m);
        } else {
            throw LoadError("unknown model kind: " + kind);
        }

        if (check_valid) {
            ValidationReport r = doc.validate();
            if (!r.ok()) throw LoadError("model fails validation:\n" + r.text());
        }
        return doc;
    } catch (const json::exception& e) {
        throw LoadError(std::string("bad model document: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw LoadError(std::string("bad model document: ") + e.what());
    }
}

ModelDoc load_model(const std::string& path, bool check_valid) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_model(ss.str(), check_valid);
}

std::string dump_model(const ModelDoc& doc) {
    NameTable nt{doc.states};
    json j;
    j["states"] = doc.states;
    j["agents"] = doc.agents;
    json val = json::object();
    switch (doc.kind) {
        case ModelKind::Topo: {
            const TopoEModel& m = doc.topo();
            j["kind"] = "topo";
            json hard = json::object(), soft = json::object();
            for (int i = 0; i < m.agents; ++i) {
                json cells = json::array();
                for (Mask c : m.part[i].cells) cells.push_back(write_state_set(c, nt));
                hard[doc.agents[i]] = cells;
                json sub = json::array();
                for (Mask s : m.topo[i].subbasis) sub.push_back(write_state_set(s, nt));
                soft[doc.agents[i]] = sub;
            }
            j["hard"] = hard;
            j["soft"] = soft;
            for (const auto& [atom, set] : m.valuation) val[atom] = write_state_set(set, nt);
            break;
        }
        case ModelKind::Relational: {
            const RelationalEvidenceModel& m = doc.relational();
            j["kind"] = "relational";
            json pl = json::object(), hd = json::object();
            for (int i = 0; i < m.agents; ++i) {
                pl[doc.agents[i]] = write_pairs(m.leq[i], nt);
                hd[doc.agents[i]] = write_pairs(m.sim[i], nt);
            }
            j["plausibility"] = pl;
            j["hard"] = hd;
            for (const auto& [atom, set] : m.valuation) val[atom] = write_state_bits(set, nt);
            break;
        }
        case ModelKind::EvPseudo: {
            const EvPseudoModel& m = doc.ev_pseudo();
            j["kind"] = "ev_pseudo";
            j["fragment"] = m.fragment_ia ? "iA" : "full";
            json groups = json::array();
            for (AgentSet g = 1; g <= m.universe(); ++g) {
                if (!m.has_group(g)) continue;
                json ga = json::array();
                for (int i = 0; i < m.agents; ++i)
                    if (g & (AgentSet{1} << i)) ga.push_back(doc.agents[i]);
                groups.push_back({{"group", ga},
                                  {"plausibility", write_pairs(m.rel[g]->leq, nt)},
                                  {"hard", write_pairs(m.rel[g]->sim, nt)}});
            }
            j["groups"] = groups;
            for (const auto& [atom, set] : m.valuation) val[atom] = write_state_bits(set, nt);
            break;
        }
        case ModelKind::KBPseudo: {
            const KBPseudoModel& m = doc.kb_pseudo();
            j["kind"] = "kb_pseudo";
            json idx = json::array();
            for (int s = 0; s <= m.agents; ++s)
                idx.push_back({{"alpha", s == m.agents ? std::string("A") : doc.agents[s]},
                               {"knowledge", write_pairs(m.knows[s], nt)},
                               {"belief", write_pairs(m.bel[s], nt)}});
            j["indices"] = idx;
            for (const auto& [atom, set] : m.valuation) val[atom] = write_state_bits(set, nt);
            break;
        }
    }
    j["valuation"] = val;
    return j.dump(2) + "\n";
}

void save_model(const ModelDoc& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw LoadError("cannot write " + path);
    out << dump_model(doc);
}

namespace {
std::vector<std::string> default_states(int n) {
    std::vector<std::string> s;
    for (int i = 0; i < n; ++i) s.push_back("s" + std::to_string(i));
    return s;
}
std::vector<std::string> default_agents(int n, std::vector<std::string> given) {
    if (!given.empty()) return given;
    static const char* names[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
    std::vector<std::string> s;
    for (int i = 0; i < n; ++i) s.push_back(names[i]);
    return s;
}
}  // namespace

ModelDoc wrap_relational(const RelationalEvidenceModel& m, std::vector<std::string> agents) {
    ModelDoc d;
    d.kind = ModelKind::Relational;
    d.states = default_states(m.carrier);
    d.agents = default_agents(m.agents, std::move(agents));
    d.model = m;
    return d;
}

ModelDoc wrap_topo(const TopoEModel& m, std::vector<std::string> agents) {
    ModelDoc d;
    d.kind = ModelKind::Topo;
    d.states = default_states(m.carrier);
    d.agents = default_agents(m.agents, std::move(agents));
    d.model = m;
    return d;
}

}  // namespace topoevid
