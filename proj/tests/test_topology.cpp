#include <doctest.h>

#include "topoevid/audit.hpp"
#include "topoevid/topology.hpp"

using namespace topoevid;

// four states w1..w4 as bits 0..3
static const Mask W1 = 1, W2 = 2, W3 = 4, W4 = 8;

TEST_CASE("generation from a two-set subbasis") {
    Topology t = generate_topology({W2 | W4, W3 | W4}, 4);
    std::vector<Mask> expect{0, W4, W2 | W4, W3 | W4, W2 | W3 | W4, 15};
    CHECK(t.opens == expect);
}

TEST_CASE("empty subbasis yields the trivial topology") {
    Topology t = generate_topology({}, 3);
    CHECK(t.opens == std::vector<Mask>{0, 7});
}

TEST_CASE("subbasis rejects the empty set and oversized carriers") {
    CHECK_THROWS_AS(generate_topology({0}, 3), std::invalid_argument);
    CHECK_THROWS_AS(generate_topology({1}, 0), std::invalid_argument);
    CHECK_THROWS_AS(generate_topology({1}, 17), std::invalid_argument);
    CHECK_THROWS_AS(generate_topology({1, 8}, 3), std::invalid_argument);  // outside carrier
}

TEST_CASE("join of the two example topologies is discrete") {
    Topology ta = generate_topology({W2 | W4, W3 | W4}, 4);
    Topology tb = generate_topology({W1 | W2, W1 | W3}, 4);
    Topology j = join({ta, tb});
    CHECK(j.opens.size() == 16);
}

TEST_CASE("interior and closure golden values") {
    Topology ta = generate_topology({W2 | W4, W3 | W4}, 4);
    CHECK(ta.interior(W1 | W2 | W4) == (W2 | W4));
    CHECK(ta.closure(W4) == Mask{15});  // {w4} is dense here
    CHECK(ta.interior(0) == 0);
    CHECK(ta.closure(0) == 0);
    CHECK(ta.interior(15) == 15);
}

TEST_CASE("interior and closure laws on random topologies") {
    Rng rng(11);
    for (int it = 0; it < 300; ++it) {
        int n = 1 + rng.below(5);
        Mask x = full_mask(n);
        std::vector<Mask> sub;
        for (int k = rng.below(4); k >= 0; --k) {
            Mask s = rng.submask(x);
            if (s) sub.push_back(s);
        }
        Topology t = generate_topology(sub, n);
        // closed under finite meets and joins
        for (Mask u : t.opens)
            for (Mask w : t.opens) {
                REQUIRE(t.is_open(u & w));
                REQUIRE(t.is_open(u | w));
            }
        for (int k = 0; k < 8; ++k) {
            Mask a = rng.submask(x), b = rng.submask(x);
            REQUIRE(subset(t.interior(a), a));
            REQUIRE(t.interior(t.interior(a)) == t.interior(a));
            REQUIRE(t.interior(a & b) == (t.interior(a) & t.interior(b)));
            REQUIRE(subset(a, t.closure(a)));
            REQUIRE(t.closure(t.closure(a)) == t.closure(a));
            REQUIRE(t.closure(a | b) == (t.closure(a) | t.closure(b)));
            REQUIRE(t.closure(x & ~a) == (x & ~t.interior(a)));
        }
    }
}

TEST_CASE("partition construction and refinement") {
    Partition p1 = make_partition(3, {1, 6});        // {1},{2,3}
    Partition p2 = make_partition(3, {3, 4});        // {1,2},{3}
    Partition j = join_partition({p1, p2});
    CHECK(j.cells == std::vector<Mask>{1, 2, 4});
    CHECK(p1.cell_of(2) == 6);
    CHECK(p1.saturate(2) == 6);
    CHECK_THROWS_AS(make_partition(3, {1, 3}), std::invalid_argument);  // overlap
    CHECK_THROWS_AS(make_partition(3, {1, 2}), std::invalid_argument);  // no cover
    CHECK_THROWS_AS(make_partition(3, {1, 0, 6}), std::invalid_argument);
}

TEST_CASE("local density and the dense-open subfamily") {
    Topology ta = generate_topology({W2 | W4, W3 | W4}, 4);
    Partition all = make_partition(4, {15});
    // every non-empty open of this topology has dense closure
    Topology d = dense_open(ta, all);
    CHECK(d.opens == ta.opens);
    CHECK(locally_dense_at(ta, all, W4, 3));
    CHECK_THROWS_AS(locally_dense_at(ta, all, W1, 0), std::invalid_argument);  // not open

    // with two cells {w1,w2},{w3,w4}, the open {w4} is no longer dense at w1's cell
    Partition split = make_partition(4, {W1 | W2, W3 | W4});
    Topology t2 = generate_topology({W2 | W4, W3 | W4, W1 | W2, W3 | W4}, 4);
    Topology d2 = dense_open(t2, split);
    for (Mask u : d2.opens) {
        if (u == 0) continue;
        CHECK(subset(split.saturate(u), t2.closure(u)));
    }
}
