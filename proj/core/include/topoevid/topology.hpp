#pragma once

// Finite topologies on carriers {0,...,n-1}, represented as bitmask families.

#include <cstdint>
#include <vector>

namespace topoevid {

using Mask = std::uint32_t;

// Largest carrier the bitmask representation will accept.
inline constexpr int kMaxCarrier = 16;

inline Mask full_mask(int carrier) { return carrier >= 32 ? ~Mask{0} : ((Mask{1} << carrier) - 1); }
inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline int popcount_mask(Mask m) { return __builtin_popcount(m); }

// Opens are kept sorted ascending; opens always contain the empty set and the
// full carrier. The generating subbasis is retained for serialization.
struct Topology {
    int carrier = 0;
    std::vector<Mask> opens;
    std::vector<Mask> subbasis;

    bool is_open(Mask u) const;
    Mask interior(Mask a) const;
    Mask closure(Mask a) const;
};

// Generates the topology whose opens are arbitrary unions of finite
// intersections of subbasis members. The empty intersection contributes the
// full carrier, so the empty subbasis yields the trivial topology.
// Rejects carrier outside [1, cap] and empty subbasis members.
Topology generate_topology(const std::vector<Mask>& subbasis, int carrier, int cap = kMaxCarrier);

// Coarsest refinement: opens generated by the union of all the opens.
Topology join(const std::vector<Topology>& ts);

struct Partition {
    int carrier = 0;
    std::vector<Mask> cells;  // disjoint, non-empty, cover the carrier; sorted by lowest member

    Mask cell_of(int x) const;
    // Union of the cells meeting a.
    Mask saturate(Mask a) const;
};

// Checks disjointness / coverage / non-emptiness.
bool is_partition(const Partition& p);

Partition make_partition(int carrier, const std::vector<Mask>& cells);

// Common refinement: the cell of x is the intersection of its cells.
Partition join_partition(const std::vector<Partition>& ps);

// u must be open in t; true when cl(u) covers the cell of x.
bool locally_dense_at(const Topology& t, const Partition& p, Mask u, int x);

// Sub-family of opens u with cl(u) covering every cell meeting u, plus the
// empty set. The result is itself a topology; this is checked.
Topology dense_open(const Topology& t, const Partition& p);

}  // namespace topoevid
