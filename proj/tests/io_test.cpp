#include <gtest/gtest.h>

#include "sgcorona/io.hpp"
#include "support/generators.hpp"

using namespace sgcorona;
using namespace sgcorona::families;

namespace {

std::size_t error_line(const std::string& text) {
    try {
        parse_graph(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST(Parse, Basic) {
    EXPECT_EQ(parse_graph("sg 2\ne 1 2 +"), path(2));
    EXPECT_EQ(parse_graph("sg 3\ne 1 2 +\ne 2 3 +\ne 3 1 -"), cycle(3, {1, 1, -1}));
    EXPECT_EQ(parse_graph("# comment\n\nsg 1\n"), empty(1));
    EXPECT_EQ(parse_graph("sg 2\r\ne 2 1 -\r\n"), path(2, {-1}));
}

TEST(Parse, Diagnostics) {
    EXPECT_EQ(error_line("sg 2\ne 1 1 +"), 2u);
    EXPECT_EQ(error_line("graph 2"), 1u);
    EXPECT_EQ(error_line("sg 2\ne 1 3 +"), 2u);
    EXPECT_EQ(error_line("sg 2\ne 1 2 *"), 2u);
    EXPECT_EQ(error_line("sg 3\ne 1 2 +\n# x\ne 2 1 -"), 4u);
    EXPECT_EQ(error_line("sg 2\nsg 2"), 2u);
    EXPECT_EQ(error_line("sg 2\ne 1 2"), 2u);
    EXPECT_EQ(error_line("sg 2\nf 1 2 +"), 2u);
    EXPECT_EQ(error_line(""), 1u);
    EXPECT_EQ(error_line("sg -1"), 1u);
    try {
        parse_graph("sg 2\ne 1 1 +");
    } catch (const ParseError& e) {
        EXPECT_STREQ(e.what(), "line 2: loop at vertex 1");
    }
}

TEST(Write, RoundTrip) {
    testkit::Rng rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const SignedGraph g = testkit::random_signed_graph_between(rng, 0, 8);
        const std::string text = write_graph(g);
        EXPECT_EQ(parse_graph(text), g);
        EXPECT_EQ(write_graph(parse_graph(text)), text);
    }
}

TEST(Write, Layout) {
    const std::string s = write_layout(ProductLayout{1, 1});
    EXPECT_EQ(s, "# layout u 1 -> 1\n# layout a 1 -> 2\n# layout v 1 1 -> 3\n");
}

TEST(Write, Spectrum) {
    EXPECT_EQ(write_spectrum(spectrum(cycle(3), MatrixKind::adjacency)), "2\n-1\n-1\n");
    EXPECT_EQ(format_real(1e-14), "0");
    EXPECT_EQ(format_real(1.4142135623730951), "1.41421356237");
}
