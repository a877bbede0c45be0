#pragma once

// Bridges between evidence pseudo-models and knowledge-belief pseudo-models,
// tree unravelling, and bounded satisfiability search.

#include <cstdint>
#include <optional>
#include <string>

#include "topoevid/models.hpp"
#include "topoevid/transform.hpp"

namespace topoevid {

// Builds the knowledge-belief companion of an evidence pseudo-model carrying
// singletons and the universe:
//   s ->_a w   iff   s ~_a w and w is maximal in the a-plausibility order
//   s |>_a w   iff   s <=_a w or s ->_a w
// The result satisfies all knowledge-belief model conditions (checked by the
// caller's validator, not here).
KBPseudoModel kb_from_evidence(const EvPseudoModel& s);

// The reverse construction:
//   s ~_a w    iff   s and w see a common |>_a-successor
//   s <=_a w   iff   s |>_a w                      (single agents)
//   s <=_A w   iff   s |>_A w, s |>_i w for all i, and w = s whenever s is
//                    already |>_A-maximal
// Output is an iA-fragment evidence pseudo-model whose companion via
// kb_from_evidence restores the input relations exactly.
EvPseudoModel evidence_from_kb(const KBPseudoModel& m);

// ----- unravelling ----------------------------------------------------------

// Histories are alternating sequences of states and labelled relation steps
// starting at a root state. `kind` records whether the step used the
// plausibility or the hard-evidence relation of `group`.
struct HistoryStep {
    bool plaus = true;  // plausibility step vs hard-evidence step
    AgentSet group = 0;
    int state = 0;
};

struct Unravelling {
    RelationalEvidenceModel model;  // carrier = histories, root is state 0
    std::vector<int> last;          // final source state per history
    std::vector<int> parent;        // -1 for the root
    std::vector<HistoryStep> step;  // step from parent, undefined for the root
    int depth = 0;
};

// All histories of length <= depth, with per-agent relations
//   h <=_i h'  :  reflexive-transitive closure of plausibility child-steps
//                 whose label contains i
//   h ~_i h'   :  closure of all child-steps (both kinds, both directions)
//                 whose label contains i
// and the valuation pulled back along `last`.
Unravelling unravel(const EvPseudoModel& s, int root, int depth);

struct PMorphismReport {
    bool atoms_ok = false;       // valuation commutes with last
    bool forth_ok = false;       // h R h'  implies  last(h) R last(h')
    bool back_interior_ok = false;   // back condition on histories below the frontier
    bool back_frontier_ok = false;   // back condition at the frontier (expected to fail)
    std::string detail;
};

// Checks how far `last` is a p-morphism from the truncated tree back to the
// source pseudo-model.
PMorphismReport last_pmorphism_check(const EvPseudoModel& s, const Unravelling& u);

// ----- bounded satisfiability ----------------------------------------------

enum class SatSemantics { Topo, EvPseudo };

struct SatVerdict {
    bool sat = false;
    int bound = 0;                  // states searched up to
    std::uint64_t models_tried = 0;
    // witness, when sat
    std::optional<RelationalEvidenceModel> witness;
    int witness_state = -1;
    // closure-set size and the doubly-exponential worst-case carrier bound
    std::size_t closure_size = 0;
    double theoretic_bound = 0;
};

struct SatOptions {
    SatSemantics semantics = SatSemantics::EvPseudo;
    bool prune_isomorphs = true;
    int nAgents = 0;  // 0: take the agents mentioned by the formula
};

// Exhaustive search over relational evidence frames with 1..maxStates states
// (equivalently, standard pseudo-models; evaluated through the requested
// semantics). The formula must be static; expand/reduce first. A SAT witness
// is re-evaluated before being returned.
SatVerdict bounded_sat(const FormulaPtr& f, const Vocab& v, int maxStates,
                       const SatOptions& opts = {});

}  // namespace topoevid
