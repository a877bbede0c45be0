#pragma once

// Extension computation for each model kind. Atoms resolve by name through a
// vocabulary; formulas with atoms the model does not value are rejected.

#include <vector>

#include "topoevid/models.hpp"

namespace topoevid {

struct TraceEntry {
    FormulaPtr formula;
    Bits extension;
};

struct EvalResult {
    Bits extension;
    std::vector<TraceEntry> trace;  // subformula extensions, innermost first (optional)
};

// Soft/hard evidence semantics. Knowledge and belief evaluate by their
// direct set-level definitions:
//   Forall_I P = { x | cell_I(x) <= P }
//   Box_I P    = int_I P
//   B_I P      = { x | cell_I(x) <= cl_I int_I P }
//   K_I P      = Box_I P  intersect  B_I P
// Announcements recurse into the updated model.
EvalResult eval_topo(const TopoEModel& m, const FormulaPtr& f, const Vocab& v,
                     bool want_trace = false);

// Box_I along the intersection preorder, Forall_I along the intersection
// equivalence. Static evidence formulas only.
EvalResult eval_relational(const RelationalEvidenceModel& m, const FormulaPtr& f, const Vocab& v,
                           bool want_trace = false);

// Same clauses over the carried group relations; the group under every
// modality must be carried by the pseudo-model.
EvalResult eval_ev_pseudo(const EvPseudoModel& m, const FormulaPtr& f, const Vocab& v,
                          bool want_trace = false);

// K along the knowledge preorder, B along the belief relation; only single
// agents and the universe.
EvalResult eval_kb_pseudo(const KBPseudoModel& m, const FormulaPtr& f, const Vocab& v,
                          bool want_trace = false);

// The six operators on an explicit set argument.
struct OpTable {
    Mask forall, box, dia, believe, know, pos_know;
};

OpTable op_table(const TopoEModel& m, AgentSet group, Mask p);

}  // namespace topoevid
