#include <gtest/gtest.h>

#include "sgcorona/charpoly.hpp"
#include "sgcorona/products.hpp"
#include "sgcorona/theorems.hpp"
#include "support/generators.hpp"

using namespace sgcorona;
using namespace sgcorona::families;

namespace {

IntPolynomial P(std::vector<long long> c) {
    std::vector<BigInt> v(c.begin(), c.end());
    return IntPolynomial(std::move(v));
}

IntPolynomial root(long long r) { return IntPolynomial::linear_factor(r); }

IntPolynomial direct(const SignedGraph& g1, const SignedGraph& g2, MatrixKind kind) {
    return char_poly(add_vertex_corona(g1, g2).graph, kind);
}

}  // namespace

TEST(TheoremA, SmallClosedForms) {
    EXPECT_EQ(product_char_poly_A(empty(1), empty(1)), P({0, -1, 0, 1}));
    const IntPolynomial x2m2 = P({-2, 0, 1});
    EXPECT_EQ(product_char_poly_A(path(2), empty(1)), root(0) * root(0) * x2m2 * x2m2);
    EXPECT_EQ(product_char_poly_A(empty(1), cycle(3)), root(0) * root(3) * pow(root(-1), 3));
}

TEST(TheoremA, MatchesProductOnRandomPairs) {
    testkit::Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const SignedGraph g1 = testkit::random_signed_graph_between(rng, 1, 4);
        const SignedGraph g2 = testkit::random_signed_graph_between(rng, 1, 4);
        EXPECT_EQ(product_char_poly_A(g1, g2), direct(g1, g2, MatrixKind::adjacency));
    }
}

TEST(TheoremL, SmallClosedForms) {
    EXPECT_EQ(product_char_poly_L(empty(1), empty(1)), root(0) * root(0) * root(2));
    EXPECT_EQ(product_char_poly_L(path(2), empty(1)), pow(root(0) * root(1) * root(3), 2));
}

TEST(TheoremQ, SmallClosedForms) {
    EXPECT_EQ(product_char_poly_Q(empty(1), empty(1)), root(0) * root(0) * root(2));
    EXPECT_EQ(product_char_poly_Q(path(2), empty(1)), direct(path(2), empty(1), MatrixKind::signless_laplacian));
}

TEST(TheoremLQ, MatchesProductForRegularFirstFactor) {
    testkit::Rng rng(22);
    for (const auto& shape : {empty(1), path(2), cycle(3), cycle(4), empty(2)}) {
        for (int trial = 0; trial < 6; ++trial) {
            const SignedGraph g1 = testkit::random_resign(rng, shape);
            const SignedGraph g2 = testkit::random_signed_graph_between(rng, 1, 4);
            EXPECT_EQ(product_char_poly_L(g1, g2), direct(g1, g2, MatrixKind::laplacian));
            EXPECT_EQ(product_char_poly_Q(g1, g2), direct(g1, g2, MatrixKind::signless_laplacian));
        }
    }
}

TEST(TheoremLQ, RejectsIrregularFirstFactor) {
    try {
        product_char_poly_L(path(3), empty(1));
        FAIL() << "expected std::invalid_argument";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("regularity hypothesis"), std::string::npos);
    }
    EXPECT_THROW(product_char_poly_Q(star(3), path(2)), std::invalid_argument);
    EXPECT_NO_THROW(product_char_poly_A(path(3), empty(1)));
}

TEST(TheoremA, ProductDegreeAndMonic) {
    const IntPolynomial f = product_char_poly_A(path(2), cycle(3));
    EXPECT_EQ(f.degree(), 10);
    EXPECT_TRUE(f.is_monic());
}
