#pragma once

// Exhaustive frame enumeration helpers for the bounded search.

#include <cstdint>
#include <functional>
#include <vector>

#include "topoevid/models.hpp"

namespace topoevid {

// Relations on small carriers packed row-major into n*n bits.
using PackedRel = std::uint32_t;

Rel unpack_rel(PackedRel p, int n);
PackedRel pack_rel(const Rel& r);

// All preorders on n states (n <= 5), as packed relations.
const std::vector<PackedRel>& all_preorders(int n);
// All equivalence relations on n states (n <= 5).
const std::vector<PackedRel>& all_equivalences(int n);

inline bool packed_subset(PackedRel a, PackedRel b) { return (a & ~b) == 0; }

// One agent's frame: a plausibility preorder inside a hard-evidence
// equivalence.
struct AgentFrame {
    PackedRel leq, sim;
};

// All (leq, sim) pairs for one agent on n states.
const std::vector<AgentFrame>& all_agent_frames(int n);

// Visits every relational evidence frame on n states with the given number
// of agents. When prune_isomorphs is set, frames that are not the
// lexicographically least representative of their isomorphism class are
// skipped. Stops early when the visitor returns false.
void enumerate_frames(int n, int agents, bool prune_isomorphs,
                      const std::function<bool(const RelationalEvidenceModel&)>& visit);

}  // namespace topoevid
