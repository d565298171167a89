#include <gtest/gtest.h>

#include "sgcorona/products.hpp"
#include "sgcorona/charpoly.hpp"
#include "support/generators.hpp"

using namespace sgcorona;
using namespace sgcorona::families;

TEST(Duplication, SingleEdge) {
    // u1 u2 edge -> a1 u2 and a2 u1, original edge gone
    const SignedGraph d = duplication(path(2, {-1}));
    EXPECT_EQ(d.order(), 4u);
    EXPECT_EQ(d.size(), 2u);
    EXPECT_FALSE(d.adjacent(0, 1));
    EXPECT_TRUE(d.adjacent(2, 1));
    EXPECT_TRUE(d.adjacent(3, 0));
    // marks of both endpoints are -1, so the duplicated edges are positive
    EXPECT_EQ(d.sign(2, 1), 1);
}

TEST(Duplication, EdgeCountDoublesAndIsBalanced) {
    testkit::Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const SignedGraph g = testkit::random_signed_graph_between(rng, 1, 7);
        const SignedGraph d = duplication(g);
        EXPECT_EQ(d.size(), 2 * g.size());
        EXPECT_TRUE(is_balanced(d).balanced);
    }
}

TEST(Corona, SmallestProduct) {
    const Product p = add_vertex_corona(empty(1), empty(1));
    EXPECT_EQ(p.graph, SignedGraph(3, {{1, 2, 1}}));
    EXPECT_EQ(p.layout.u(0), 0u);
    EXPECT_EQ(p.layout.a(0), 1u);
    EXPECT_EQ(p.layout.v(0, 0), 2u);
}

TEST(Corona, OrderSizeAndDegrees) {
    const SignedGraph g1 = path(3, {1, -1});
    const SignedGraph g2 = cycle(3, {1, 1, -1});
    const Product p = add_vertex_corona(g1, g2);
    const std::size_t n1 = 3, n2 = 3;
    EXPECT_EQ(p.graph.order(), n1 * (2 + n2));
    EXPECT_EQ(p.graph.size(), 2 * g1.size() + n1 * g2.size() + n1 * n2);
    for (std::size_t i = 0; i < n1; ++i) {
        EXPECT_EQ(p.graph.degree(p.layout.u(i)), g1.degree(i));
        EXPECT_EQ(p.graph.degree(p.layout.a(i)), n2 + g1.degree(i));
        for (std::size_t j = 0; j < n2; ++j) EXPECT_EQ(p.graph.degree(p.layout.v(i, j)), g2.degree(j) + 1);
    }
}

TEST(Corona, JoinSignsAreMarkProducts) {
    const SignedGraph g1 = path(3, {1, -1});
    const SignedGraph g2 = path(2, {-1});
    const Marking m1 = canonical_marking(g1), m2 = canonical_marking(g2);
    for (const Product& p : {add_vertex_corona(g1, g2), vertex_corona(g1, g2)}) {
        const bool at_duplicate = p.graph.adjacent(p.layout.a(0), p.layout.v(0, 0));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                const std::size_t hub = at_duplicate ? p.layout.a(i) : p.layout.u(i);
                EXPECT_EQ(p.graph.sign(hub, p.layout.v(i, j)), m1[i] * m2[j]);
            }
    }
}

TEST(Corona, LayoutRoundTrip) {
    const ProductLayout L{3, 4};
    for (std::size_t c = 0; c < 3; ++c)
        for (std::size_t j = 0; j < 4; ++j) {
            const auto [cc, jj] = L.copy_position(L.v(c, j));
            EXPECT_EQ(cc, c);
            EXPECT_EQ(jj, j);
        }
    EXPECT_TRUE(L.is_original(2));
    EXPECT_TRUE(L.is_duplicate(3));
    EXPECT_TRUE(L.in_copy(6));
}

TEST(SwitchingIsomorphism, WitnessOnFixedPair) {
    const SignedGraph g1 = cycle(3, {1, -1, 1});
    const SignedGraph g2 = path(2, {-1});
    const auto w = switching_iso_witness(g1, g2);
    EXPECT_EQ(switching(relabel(add_vertex_corona(g1, g2).graph, w.bijection), w.theta),
              vertex_corona(g1, g2).graph);
}

TEST(Relabel, RejectsNonPermutations) {
    EXPECT_THROW(relabel(path(3), {0, 0, 1}), std::invalid_argument);
    EXPECT_THROW(relabel(path(3), {0, 1}), std::invalid_argument);
}
