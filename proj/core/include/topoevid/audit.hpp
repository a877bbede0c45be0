#pragma once

// Seeded random models/formulas, and the validity audit that instantiates
// every axiom scheme over batches of random models. Schemes marked as
// expected-invalid must produce at least one counterexample.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "topoevid/models.hpp"
#include "topoevid/transform.hpp"

namespace topoevid {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    int below(int n) { return int(eng() % std::uint64_t(n)); }
    bool chance(double p) { return std::uniform_real_distribution<>(0, 1)(eng) < p; }
    Mask submask(Mask of) {
        Mask r = 0;
        for (int i = 0; i < kMaxCarrier; ++i)
            if ((of >> i & 1) && chance(0.5)) r |= Mask{1} << i;
        return r;
    }
};

Vocab standard_vocab(int nAtoms, int nAgents);

TopoEModel random_topo_model(Rng& rng, int maxCarrier, int maxAgents, int nAtoms);
RelationalEvidenceModel random_rel_model(Rng& rng, int maxCarrier, int maxAgents, int nAtoms);
EvPseudoModel random_ev_pseudo(Rng& rng, int maxCarrier, int maxAgents, int nAtoms, bool ia_only);
// companion of a random evidence pseudo-model; always passes its validator
KBPseudoModel random_kb_pseudo(Rng& rng, int maxCarrier, int maxAgents, int nAtoms);

struct FormulaGenOpts {
    int maxDepth = 2;
    int nAtoms = 2;
    int nAgents = 2;
    bool ev = true;       // Box / Forall
    bool kb = false;      // K / B (single agents and the universe)
    bool share = false;   // announcement modalities
    bool alpha_only = false;  // restrict Box/Forall groups to agents and the universe
    bool share_universe_only = false;
};

FormulaPtr random_formula(Rng& rng, const FormulaGenOpts& o);

struct SchemeResult {
    std::string name;
    bool expect_valid = true;
    long instances = 0;
    long failures = 0;
    std::string first_counterexample;
    bool ok() const { return expect_valid ? failures == 0 : failures > 0; }
};

struct AuditReport {
    std::vector<SchemeResult> schemes;
    long models = 0;
    bool ok() const {
        for (const auto& s : schemes)
            if (!s.ok()) return false;
        return true;
    }
};

// nModels random models per semantics; instancesPerModel scheme instances on
// each. Deterministic for a fixed seed.
AuditReport axiom_audit(std::uint64_t seed, int nModels, int instancesPerModel = 3);

}  // namespace topoevid
