#include "topoevid/enumerate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>

namespace topoevid {

Rel unpack_rel(PackedRel p, int n) {
    Rel r = Rel::empty(n);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            if ((p >> (s * n + t)) & 1) r.add(s, t);
    return r;
}

PackedRel pack_rel(const Rel& r) {
    if (r.n > 5) throw std::invalid_argument("carrier too large to pack");
    PackedRel p = 0;
    for (int s = 0; s < r.n; ++s)
        for (int t = 0; t < r.n; ++t)
            if (r.has(s, t)) p |= PackedRel{1} << (s * r.n + t);
    return p;
}

namespace {

std::vector<PackedRel> compute(int n, bool equiv) {
    // reflexive closures are forced; iterate over the off-diagonal bits
    std::vector<int> off;
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            if (s != t) off.push_back(s * n + t);
    PackedRel diag = 0;
    for (int s = 0; s < n; ++s) diag |= PackedRel{1} << (s * n + s);
    std::vector<PackedRel> out;
    for (std::uint32_t v = 0; v < (1u << off.size()); ++v) {
        PackedRel p = diag;
        for (std::size_t k = 0; k < off.size(); ++k)
            if ((v >> k) & 1) p |= PackedRel{1} << off[k];
        Rel r = unpack_rel(p, n);
        if (!r.transitive()) continue;
        if (equiv && !r.symmetric()) continue;
        out.push_back(p);
    }
    return out;
}

}  // namespace

const std::vector<PackedRel>& all_preorders(int n) {
    static std::map<int, std::vector<PackedRel>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        if (n < 1 || n > 5) throw std::invalid_argument("carrier out of range for enumeration");
        it = cache.emplace(n, compute(n, false)).first;
    }
    return it->second;
}

const std::vector<PackedRel>& all_equivalences(int n) {
    static std::map<int, std::vector<PackedRel>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        if (n < 1 || n > 5) throw std::invalid_argument("carrier out of range for enumeration");
        it = cache.emplace(n, compute(n, true)).first;
    }
    return it->second;
}

const std::vector<AgentFrame>& all_agent_frames(int n) {
    static std::map<int, std::vector<AgentFrame>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<AgentFrame> out;
    for (PackedRel sim : all_equivalences(n))
        for (PackedRel leq : all_preorders(n))
            if (packed_subset(leq, sim)) out.push_back({leq, sim});
    return cache.emplace(n, std::move(out)).first->second;
}

namespace {

PackedRel permute_packed(PackedRel p, int n, const std::array<int, 5>& perm) {
    PackedRel q = 0;
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            if ((p >> (s * n + t)) & 1) q |= PackedRel{1} << (perm[s] * n + perm[t]);
    return q;
}

// least representative of the frame's isomorphism class?
bool frame_canonical(const std::vector<AgentFrame>& fr, int n) {
    std::array<int, 5> perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);
    std::vector<std::uint64_t> self;
    for (const AgentFrame& a : fr) self.push_back((std::uint64_t(a.sim) << 32) | a.leq);
    std::vector<std::uint64_t> other(fr.size());
    while (std::next_permutation(perm.begin(), perm.begin() + n)) {
        for (std::size_t i = 0; i < fr.size(); ++i)
            other[i] = (std::uint64_t(permute_packed(fr[i].sim, n, perm)) << 32) |
                       permute_packed(fr[i].leq, n, perm);
        if (other < self) return false;
    }
    return true;
}

}  // namespace

void enumerate_frames(int n, int agents, bool prune_isomorphs,
                      const std::function<bool(const RelationalEvidenceModel&)>& visit) {
    if (agents < 1 || agents > kMaxAgents) throw std::invalid_argument("agent count out of range");
    const std::vector<AgentFrame>& frames = all_agent_frames(n);
    std::vector<std::size_t> pick(agents, 0);
    std::vector<AgentFrame> cur(agents);
    RelationalEvidenceModel m;
    m.carrier = n;
    m.agents = agents;
    m.leq.assign(agents, Rel::empty(n));
    m.sim.assign(agents, Rel::empty(n));
    for (;;) {
        for (int i = 0; i < agents; ++i) cur[i] = frames[pick[i]];
        if (!prune_isomorphs || frame_canonical(cur, n)) {
            for (int i = 0; i < agents; ++i) {
                m.leq[i] = unpack_rel(cur[i].leq, n);
                m.sim[i] = unpack_rel(cur[i].sim, n);
            }
            if (!visit(m)) return;
        }
        int i = agents - 1;
        while (i >= 0 && ++pick[i] == frames.size()) pick[i--] = 0;
        if (i < 0) break;
    }
}

}  // namespace topoevid
