// Command-line front end: model checking, evidence sharing, translations,
// conversions, bounded satisfiability, validity audits, closure sets,
// unravelling and validation over JSON model files.
//
// Exit codes: 0 success / positive verdict, 1 negative verdict, 2 bad input.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "topoevid/audit.hpp"
#include "topoevid/parser.hpp"
#include "topoevid/representation.hpp"
#include "topoevid/semantics.hpp"
#include "topoevid/serialize.hpp"
#include "topoevid/transform.hpp"

using namespace topoevid;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kBadInput = 2;

struct Options {
    std::string model_path, formula_text, group_text, out_path, verify_path, mode = "tr";
    std::string to_kind, at_state, semantics = "ev_pseudo", extra_agents;
    int max_states = 4;
    int models = 200;
    int depth = 0;
    std::uint64_t seed = 0;
    bool json_out = false;
    bool trace = false;
    bool no_prune = false;
};

std::vector<std::string> state_names(const ModelDoc& doc, const Bits& b) {
    std::vector<std::string> out;
    for (int i = 0; i < b.size(); ++i)
        if (b.test(i)) out.push_back(doc.states[i]);
    return out;
}

void emit_model(const ModelDoc& doc, const std::string& out_path) {
    if (out_path.empty())
        std::cout << dump_model(doc);
    else
        save_model(doc, out_path);
}

// parse against the model's agent names; reject agents/atoms it cannot value
FormulaPtr parse_for_model(const std::string& text, const ModelDoc& doc, Vocab& v) {
    v = doc.make_vocab();
    std::size_t base_agents = v.agents.size();
    FormulaPtr f = parse_formula(text, v);
    if (v.agents.size() > base_agents)
        throw std::invalid_argument("formula mentions agent '" + v.agents[base_agents] +
                                    "' unknown to the model");
    return f;
}

EvalResult eval_on(const ModelDoc& doc, const FormulaPtr& f, const Vocab& v, bool trace) {
    switch (doc.kind) {
        case ModelKind::Topo:
            return eval_topo(doc.topo(), f, v, trace);
        case ModelKind::Relational:
            return eval_relational(doc.relational(), f, v, trace);
        case ModelKind::EvPseudo:
            return eval_ev_pseudo(doc.ev_pseudo(), f, v, trace);
        case ModelKind::KBPseudo:
            return eval_kb_pseudo(doc.kb_pseudo(), f, v, trace);
    }
    throw std::logic_error("unreachable");
}

int cmd_check(const Options& o) {
    ModelDoc doc = load_model(o.model_path);
    Vocab v;
    FormulaPtr f = parse_for_model(o.formula_text, doc, v);
    EvalResult res = eval_on(doc, f, v, o.trace);
    int at = -1;
    if (!o.at_state.empty()) {
        at = doc.state_index(o.at_state);
        if (at < 0) throw std::invalid_argument("unknown state: " + o.at_state);
    }
    bool verdict = at >= 0 ? res.extension.test(at) : res.extension.any();
    if (o.json_out) {
        json j;
        j["formula"] = print(f, v);
        j["extension"] = state_names(doc, res.extension);
        if (at >= 0) j["at"] = o.at_state;
        j["verdict"] = verdict;
        if (o.trace) {
            json tr = json::array();
            for (const auto& e : res.trace)
                tr.push_back({{"formula", print(e.formula, v)},
                              {"extension", state_names(doc, e.extension)}});
            j["trace"] = tr;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        if (o.trace)
            for (const auto& e : res.trace) {
                std::cout << "  " << print(e.formula, v) << "  =  {";
                auto names = state_names(doc, e.extension);
                for (std::size_t i = 0; i < names.size(); ++i)
                    std::cout << (i ? "," : "") << names[i];
                std::cout << "}\n";
            }
        std::cout << "extension: {";
        auto names = state_names(doc, res.extension);
        for (std::size_t i = 0; i < names.size(); ++i) std::cout << (i ? "," : "") << names[i];
        std::cout << "}\n";
        if (at >= 0)
            std::cout << (verdict ? "true" : "false") << " at " << o.at_state << "\n";
    }
    return verdict ? kOk : kNegative;
}

int cmd_share(const Options& o) {
    ModelDoc doc = load_model(o.model_path);
    if (doc.kind != ModelKind::Topo)
        throw std::invalid_argument("share acts on soft/hard evidence models");
    Vocab v = doc.make_vocab();
    std::size_t base = v.agents.size();
    Group g = parse_group(o.group_text, v);
    if (v.agents.size() > base) throw std::invalid_argument("group mentions an unknown agent");
    AgentSet mask = group_mask(g, doc.topo().agents);
    ModelDoc out = doc;
    out.model = share_update(doc.topo(), mask);
    emit_model(out, o.out_path);
    return kOk;
}

int cmd_translate(const Options& o) {
    Vocab v;
    FormulaPtr f = parse_formula(o.formula_text, v);
    FormulaPtr g;
    if (o.mode == "tr") {
        g = expand_kb(f);
    } else if (o.mode == "reduce") {
        bool has_kb = false, has_ev = false;
        for (const auto& s : subformulas(f)) {
            if (s->kind == Kind::Know || s->kind == Kind::Believe) has_kb = true;
            if (s->kind == Kind::Box || s->kind == Kind::Forall) has_ev = true;
        }
        if (has_kb && has_ev)
            throw std::invalid_argument("mixed K/B and Box/Forall: no reduction system applies");
        g = reduce_dynamic(f, has_kb ? DynSystem::KBDyn : DynSystem::EvDyn);
    } else {
        throw std::invalid_argument("mode must be tr or reduce");
    }
    bool verified = true;
    if (!o.verify_path.empty()) {
        ModelDoc doc = load_model(o.verify_path);
        Vocab mv;
        FormulaPtr f2 = parse_for_model(o.formula_text, doc, mv);
        FormulaPtr g2 = (o.mode == "tr")
                            ? expand_kb(f2)
                            : reduce_dynamic(f2, in_language(f2, Language::EvDyn)
                                                     ? DynSystem::EvDyn
                                                     : DynSystem::KBDyn);
        verified = eval_on(doc, f2, mv, false).extension == eval_on(doc, g2, mv, false).extension;
    }
    if (o.json_out) {
        json j;
        j["input"] = print(f, v);
        j["output"] = print(g, v);
        if (!o.verify_path.empty()) j["verified"] = verified;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << print(g, v) << "\n";
        if (!o.verify_path.empty())
            std::cout << (verified ? "verified: extensions agree"
                                   : "MISMATCH: extensions differ") << "\n";
    }
    return verified ? kOk : kNegative;
}

int cmd_convert(const Options& o) {
    ModelDoc doc = load_model(o.model_path);
    ModelDoc out = doc;
    auto as_relational = [&]() -> RelationalEvidenceModel {
        switch (doc.kind) {
            case ModelKind::Topo:
                return rel_of_topo(doc.topo());
            case ModelKind::Relational:
                return doc.relational();
            case ModelKind::EvPseudo:
                return rel_of_standard_pseudo(doc.ev_pseudo());
            default:
                throw std::invalid_argument("no conversion path from this kind");
        }
    };
    if (o.to_kind == "relational") {
        out.kind = ModelKind::Relational;
        out.model = as_relational();
    } else if (o.to_kind == "topo") {
        out.kind = ModelKind::Topo;
        out.model = topo_of_rel(as_relational());
    } else if (o.to_kind == "ev_pseudo" || o.to_kind == "ev_pseudo_ia") {
        out.kind = ModelKind::EvPseudo;
        if (doc.kind == ModelKind::KBPseudo)
            out.model = evidence_from_kb(doc.kb_pseudo());
        else
            out.model = ev_pseudo_of_rel(as_relational(), o.to_kind == "ev_pseudo_ia");
    } else if (o.to_kind == "kb_pseudo") {
        EvPseudoModel s = (doc.kind == ModelKind::EvPseudo)
                              ? doc.ev_pseudo()
                              : ev_pseudo_of_rel(as_relational(), true);
        out.kind = ModelKind::KBPseudo;
        out.model = kb_from_evidence(s);
    } else {
        throw std::invalid_argument(
            "target kind must be topo, relational, ev_pseudo, ev_pseudo_ia or kb_pseudo");
    }
    emit_model(out, o.out_path);
    return kOk;
}

int cmd_sat(const Options& o) {
    Vocab v;
    FormulaPtr f = parse_formula(o.formula_text, v);
    // normalize to the static evidence language
    bool has_share = false, has_kb = false;
    for (const auto& s : subformulas(f)) {
        if (s->kind == Kind::Share) has_share = true;
        if (s->kind == Kind::Know || s->kind == Kind::Believe) has_kb = true;
    }
    if (has_share) f = reduce_dynamic(f, has_kb ? DynSystem::KBDyn : DynSystem::EvDyn);
    if (has_kb) f = expand_kb(f);

    SatOptions so;
    so.prune_isomorphs = !o.no_prune;
    if (o.semantics == "topo")
        so.semantics = SatSemantics::Topo;
    else if (o.semantics == "ev_pseudo")
        so.semantics = SatSemantics::EvPseudo;
    else
        throw std::invalid_argument("semantics must be topo or ev_pseudo");

    SatVerdict verdict = bounded_sat(f, v, o.max_states, so);
    if (o.json_out) {
        json j;
        j["formula"] = print(f, v);
        j["sat"] = verdict.sat;
        j["bound"] = verdict.bound;
        j["models_tried"] = verdict.models_tried;
        j["closure_size"] = verdict.closure_size;
        j["theoretic_carrier_bound"] = verdict.theoretic_bound;
        if (verdict.sat) {
            ModelDoc w = wrap_relational(*verdict.witness, {});
            j["witness"] = json::parse(dump_model(w));
            j["witness_state"] = w.states[verdict.witness_state];
        }
        std::cout << j.dump(2) << "\n";
    } else if (verdict.sat) {
        ModelDoc w = wrap_relational(*verdict.witness, {});
        std::cout << "SAT at " << w.states[verdict.witness_state] << " ("
                  << verdict.models_tried << " models tried, closure size "
                  << verdict.closure_size << ")\n"
                  << dump_model(w);
    } else {
        std::cout << "UNSAT up to " << verdict.bound << " states (" << verdict.models_tried
                  << " models tried, closure size " << verdict.closure_size
                  << ", worst-case carrier bound 2^" << verdict.closure_size << ")\n";
    }
    return verdict.sat ? kOk : kNegative;
}

int cmd_audit(const Options& o) {
    AuditReport rep = axiom_audit(o.seed, o.models);
    if (o.json_out) {
        json arr = json::array();
        for (const auto& s : rep.schemes)
            arr.push_back({{"scheme", s.name},
                           {"expect_valid", s.expect_valid},
                           {"instances", s.instances},
                           {"failures", s.failures},
                           {"ok", s.ok()},
                           {"counterexample", s.first_counterexample}});
        json j;
        j["models_per_semantics"] = rep.models;
        j["seed"] = o.seed;
        j["ok"] = rep.ok();
        j["schemes"] = arr;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& s : rep.schemes) {
            std::cout << (s.ok() ? "  ok   " : "  FAIL ") << s.name << "  (" << s.instances
                      << " instances, " << s.failures << " failures";
            if (!s.expect_valid) std::cout << ", counterexample expected";
            std::cout << ")\n";
            if (!s.ok() && !s.first_counterexample.empty())
                std::cout << "         " << s.first_counterexample << "\n";
        }
        std::cout << (rep.ok() ? "audit passed" : "audit FAILED") << "\n";
    }
    return rep.ok() ? kOk : kNegative;
}

int cmd_closure(const Options& o) {
    Vocab v;
    FormulaPtr f = parse_formula(o.formula_text, v);
    if (!o.extra_agents.empty()) {
        std::string name;
        std::string src = o.extra_agents + ",";
        for (char ch : src) {
            if (ch == ',') {
                if (!name.empty()) v.agent_id(name);
                name.clear();
            } else if (!std::isspace(static_cast<unsigned char>(ch))) {
                name += ch;
            }
        }
    }
    for (const auto& s : subformulas(f))
        if (s->kind == Kind::Share)
            throw std::invalid_argument("closure takes a static formula; reduce first");
    f = expand_kb(f);
    int nAgents = std::max<std::size_t>(1, v.agents.size());
    FormulaSet phi = closure_set(f, nAgents);
    if (o.json_out) {
        json arr = json::array();
        for (const auto& g : phi) arr.push_back(print(g, v));
        json j;
        j["agents"] = v.agents;
        j["size"] = phi.size();
        j["members"] = arr;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "closure over " << nAgents << " agents, " << phi.size() << " members:\n";
        for (const auto& g : phi) std::cout << "  " << print(g, v) << "\n";
    }
    return kOk;
}

int cmd_unravel(const Options& o) {
    ModelDoc doc = load_model(o.model_path);
    EvPseudoModel s;
    if (doc.kind == ModelKind::EvPseudo)
        s = doc.ev_pseudo();
    else if (doc.kind == ModelKind::Relational)
        s = ev_pseudo_of_rel(doc.relational(), true);
    else
        throw std::invalid_argument("unravel takes a relational or pseudo model");
    int root = doc.state_index(o.at_state);
    if (root < 0) throw std::invalid_argument("unknown state: " + o.at_state);
    Unravelling u = unravel(s, root, o.depth);
    PMorphismReport pr = last_pmorphism_check(s, u);

    ModelDoc out = wrap_relational(u.model, doc.agents);
    for (int h = 0; h < u.model.carrier; ++h)
        out.states[h] = "h" + std::to_string(h) + "_" + doc.states[u.last[h]];
    if (o.json_out) {
        json j;
        j["histories"] = u.model.carrier;
        j["depth"] = u.depth;
        j["model"] = json::parse(dump_model(out));
        json lastj = json::array();
        for (int h = 0; h < u.model.carrier; ++h) lastj.push_back(doc.states[u.last[h]]);
        j["last"] = lastj;
        j["pmorphism"] = {{"atoms", pr.atoms_ok},
                          {"forth", pr.forth_ok},
                          {"back_interior", pr.back_interior_ok},
                          {"back_frontier", pr.back_frontier_ok}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << u.model.carrier << " histories at depth " << u.depth << "\n"
                  << "atoms " << (pr.atoms_ok ? "ok" : "FAIL") << ", forth "
                  << (pr.forth_ok ? "ok" : "FAIL") << ", back below frontier "
                  << (pr.back_interior_ok ? "ok" : "FAIL") << ", back at frontier "
                  << (pr.back_frontier_ok ? "ok" : "fails (truncation)") << "\n";
        if (o.out_path.empty()) std::cout << dump_model(out);
    }
    if (!o.out_path.empty()) save_model(out, o.out_path);
    return kOk;
}

int cmd_validate(const Options& o) {
    ModelDoc doc = load_model(o.model_path, false);
    ValidationReport rep = doc.validate();
    if (o.json_out) {
        json j;
        j["ok"] = rep.ok();
        j["problems"] = rep.problems;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (rep.ok() ? "valid" : rep.text());
    }
    return rep.ok() ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-model toolkit for multi-agent evidence logics"};
    app.require_subcommand(1);
    Options o;

    auto* check = app.add_subcommand("check", "evaluate a formula on a model");
    check->add_option("model", o.model_path)->required();
    check->add_option("formula", o.formula_text)->required();
    check->add_option("--at", o.at_state, "state to test");
    check->add_flag("--trace", o.trace, "print subformula extensions");
    check->add_flag("--json", o.json_out);

    auto* share = app.add_subcommand("share", "pool a group's evidence");
    share->add_option("model", o.model_path)->required();
    share->add_option("group", o.group_text)->required();
    share->add_option("-o,--out", o.out_path);
    share->add_flag("--json", o.json_out);

    auto* translate = app.add_subcommand("translate", "expand K/B or reduce announcements");
    translate->add_option("formula", o.formula_text)->required();
    translate->add_option("--mode", o.mode, "tr | reduce")->default_val("tr");
    translate->add_option("--verify", o.verify_path, "model to verify the equivalence on");
    translate->add_flag("--json", o.json_out);

    auto* convert = app.add_subcommand("convert", "convert between model kinds");
    convert->add_option("model", o.model_path)->required();
    convert->add_option("--to", o.to_kind)->required();
    convert->add_option("-o,--out", o.out_path);
    convert->add_flag("--json", o.json_out);

    auto* sat = app.add_subcommand("sat", "bounded satisfiability search");
    sat->add_option("formula", o.formula_text)->required();
    sat->add_option("--max", o.max_states, "state bound")->default_val(4);
    sat->add_option("--semantics", o.semantics, "topo | ev_pseudo")->default_val("ev_pseudo");
    sat->add_flag("--no-prune", o.no_prune, "disable isomorphism pruning");
    sat->add_flag("--json", o.json_out);

    auto* audit = app.add_subcommand("audit", "validity audit over random models");
    audit->add_option("--models", o.models, "models per semantics")->default_val(200);
    audit->add_option("--seed", o.seed)->default_val(0);
    audit->add_flag("--json", o.json_out);

    auto* closure = app.add_subcommand("closure", "closure set of a formula");
    closure->add_option("formula", o.formula_text)->required();
    closure->add_option("--agents", o.extra_agents, "extra agents in the universe (comma list)");
    closure->add_flag("--json", o.json_out);

    auto* unravelc = app.add_subcommand("unravel", "truncated tree unravelling");
    unravelc->add_option("model", o.model_path)->required();
    unravelc->add_option("state", o.at_state)->required();
    unravelc->add_option("depth", o.depth)->required();
    unravelc->add_option("-o,--out", o.out_path);
    unravelc->add_flag("--json", o.json_out);

    auto* validate = app.add_subcommand("validate", "run a model's validator");
    validate->add_option("model", o.model_path)->required();
    validate->add_flag("--json", o.json_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(o);
        if (share->parsed()) return cmd_share(o);
        if (translate->parsed()) return cmd_translate(o);
        if (convert->parsed()) return cmd_convert(o);
        if (sat->parsed()) return cmd_sat(o);
        if (audit->parsed()) return cmd_audit(o);
        if (closure->parsed()) return cmd_closure(o);
        if (unravelc->parsed()) return cmd_unravel(o);
        if (validate->parsed()) return cmd_validate(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}
