#include "topoevid/topology.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace topoevid {

bool Topology::is_open(Mask u) const {
    return std::binary_search(opens.begin(), opens.end(), u);
}

Mask Topology::interior(Mask a) const {
    Mask r = 0;
    for (Mask u : opens)
        if (subset(u, a)) r |= u;
    return r;
}

Mask Topology::closure(Mask a) const {
    Mask x = full_mask(carrier);
    return x & ~interior(x & ~a);
}

namespace {

std::vector<Mask> close_family(std::vector<Mask> fam, bool under_intersection, bool under_union) {
    std::unordered_set<Mask> seen(fam.begin(), fam.end());
    if (under_intersection) {
        for (std::size_t i = 0; i < fam.size(); ++i)
            for (std::size_t j = 0; j < fam.size(); ++j) {
                Mask m = fam[i] & fam[j];
                if (seen.insert(m).second) fam.push_back(m);
            }
    }
    if (under_union) {
        for (std::size_t i = 0; i < fam.size(); ++i)
            for (std::size_t j = 0; j < fam.size(); ++j) {
                Mask m = fam[i] | fam[j];
                if (seen.insert(m).second) fam.push_back(m);
            }
    }
    return fam;
}

}  // namespace

Topology generate_topology(const std::vector<Mask>& subbasis, int carrier, int cap) {
    if (cap < 1 || cap > kMaxCarrier) throw std::invalid_argument("carrier cap out of range");
    if (carrier < 1 || carrier > cap) throw std::invalid_argument("carrier size out of range");
    Mask x = full_mask(carrier);
    std::vector<Mask> fam;
    fam.reserve(subbasis.size() + 2);
    for (Mask s : subbasis) {
        if (s == 0) throw std::invalid_argument("empty set not allowed in a subbasis");
        if (!subset(s, x)) throw std::invalid_argument("subbasis member outside carrier");
        fam.push_back(s);
    }
    fam.push_back(x);  // empty intersection
    fam = close_family(std::move(fam), true, false);
    fam = close_family(std::move(fam), false, true);
    fam.push_back(0);
    std::sort(fam.begin(), fam.end());
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    Topology t;
    t.carrier = carrier;
    t.opens = std::move(fam);
    t.subbasis = subbasis;
    return t;
}

Topology join(const std::vector<Topology>& ts) {
    if (ts.empty()) throw std::invalid_argument("join of no topologies");
    int carrier = ts.front().carrier;
    std::vector<Mask> gen;
    for (const Topology& t : ts) {
        if (t.carrier != carrier) throw std::invalid_argument("join over mismatched carriers");
        for (Mask u : t.opens)
            if (u != 0) gen.push_back(u);
    }
    return generate_topology(gen, carrier);
}

Mask Partition::cell_of(int x) const {
    for (Mask c : cells)
        if (c & (Mask{1} << x)) return c;
    return 0;
}

Mask Partition::saturate(Mask a) const {
    Mask r = 0;
    for (Mask c : cells)
        if (c & a) r |= c;
    return r;
}

bool is_partition(const Partition& p) {
    if (p.carrier < 1 || p.carrier > kMaxCarrier) return false;
    Mask covered = 0;
    for (Mask c : p.cells) {
        if (c == 0) return false;
        if (c & covered) return false;
        covered |= c;
    }
    return covered == full_mask(p.carrier);
}

Partition make_partition(int carrier, const std::vector<Mask>& cells) {
    Partition p;
    p.carrier = carrier;
    p.cells = cells;
    std::sort(p.cells.begin(), p.cells.end(),
              [](Mask a, Mask b) { return (a & -a) < (b & -b); });
    if (!is_partition(p)) throw std::invalid_argument("not a partition of the carrier");
    return p;
}

Partition join_partition(const std::vector<Partition>& ps) {
    if (ps.empty()) throw std::invalid_argument("join of no partitions");
    int carrier = ps.front().carrier;
    for (const Partition& p : ps)
        if (p.carrier != carrier) throw std::invalid_argument("join over mismatched carriers");
    std::vector<Mask> cells;
    Mask done = 0;
    for (int x = 0; x < carrier; ++x) {
        if (done & (Mask{1} << x)) continue;
        Mask c = full_mask(carrier);
        for (const Partition& p : ps) c &= p.cell_of(x);
        cells.push_back(c);
        done |= c;
    }
    return make_partition(carrier, cells);
}

bool locally_dense_at(const Topology& t, const Partition& p, Mask u, int x) {
    if (!t.is_open(u)) throw std::invalid_argument("locally_dense_at expects an open set");
    if (x < 0 || x >= t.carrier) throw std::invalid_argument("state out of range");
    return subset(p.cell_of(x), t.closure(u));
}

Topology dense_open(const Topology& t, const Partition& p) {
    if (t.carrier != p.carrier) throw std::invalid_argument("carrier mismatch");
    std::vector<Mask> res;
    for (Mask u : t.opens) {
        if (u == 0) continue;
        if (subset(p.saturate(u), t.closure(u))) res.push_back(u);
    }
    res.push_back(0);
    std::sort(res.begin(), res.end());
    Topology d;
    d.carrier = t.carrier;
    d.opens = res;
    d.subbasis = res;
    // The dense sub-family is closed under finite intersections and unions;
    // fail loudly if that ever breaks.
    for (std::size_t i = 0; i < res.size(); ++i)
        for (std::size_t j = i; j < res.size(); ++j)
            if (!d.is_open(res[i] & res[j]) || !d.is_open(res[i] | res[j]))
                throw std::logic_error("dense opens failed to form a topology");
    return d;
}

}  // namespace topoevid
