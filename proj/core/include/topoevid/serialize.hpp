#pragma once

// JSON model files. States and agents are named; topologies are stored as
// subbases and regenerated on load.

#include <string>
#include <variant>
#include <vector>

#include "topoevid/models.hpp"

namespace topoevid {

enum class ModelKind { Topo, Relational, EvPseudo, KBPseudo };

struct ModelDoc {
    ModelKind kind = ModelKind::Topo;
    std::vector<std::string> states;
    std::vector<std::string> agents;
    std::variant<TopoEModel, RelationalEvidenceModel, EvPseudoModel, KBPseudoModel> model;

    const TopoEModel& topo() const { return std::get<TopoEModel>(model); }
    const RelationalEvidenceModel& relational() const {
        return std::get<RelationalEvidenceModel>(model);
    }
    const EvPseudoModel& ev_pseudo() const { return std::get<EvPseudoModel>(model); }
    const KBPseudoModel& kb_pseudo() const { return std::get<KBPseudoModel>(model); }

    int carrier() const { return int(states.size()); }
    int state_index(const std::string& name) const;  // -1 if unknown

    // vocabulary seeded with the model's agent names (atoms intern on parse)
    Vocab make_vocab() const;

    ValidationReport validate() const;
};

struct LoadError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses a model document. With check_valid set, a model failing its kind's
// validator raises LoadError carrying the report.
ModelDoc parse_model(const std::string& json_text, bool check_valid = true);
ModelDoc load_model(const std::string& path, bool check_valid = true);

std::string dump_model(const ModelDoc& doc);  // pretty-printed JSON
void save_model(const ModelDoc& doc, const std::string& path);

// Default state names s0..s(n-1) / given agent names.
ModelDoc wrap_relational(const RelationalEvidenceModel& m, std::vector<std::string> agents = {});
ModelDoc wrap_topo(const TopoEModel& m, std::vector<std::string> agents = {});

}  // namespace topoevid
