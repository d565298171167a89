#include <gtest/gtest.h>

#include "sgcorona/polynomial.hpp"

using namespace sgcorona;

namespace {

IntPolynomial P(std::vector<long long> c) {
    std::vector<BigInt> v(c.begin(), c.end());
    return IntPolynomial(std::move(v));
}

}  // namespace

TEST(Polynomial, TrimsAndReportsDegree) {
    EXPECT_EQ(P({1, 2, 0, 0}).degree(), 1);
    EXPECT_TRUE(P({0, 0}).is_zero());
    EXPECT_EQ(IntPolynomial().degree(), -1);
}

TEST(Polynomial, Arithmetic) {
    const IntPolynomial a = P({-1, 0, 1});  // x^2 - 1
    const IntPolynomial b = P({1, 1});      // x + 1
    EXPECT_EQ(a * b, P({-1, -1, 1, 1}));
    EXPECT_EQ(a + b, P({0, 1, 1}));
    EXPECT_EQ(a - a, IntPolynomial());
    EXPECT_EQ(exact_quotient(a, b), P({-1, 1}));
    EXPECT_THROW(exact_quotient(a, P({2, 1})), std::domain_error);
}

TEST(Polynomial, EvaluateShiftDerivative) {
    const IntPolynomial p = P({2, -3, 0, 1});  // x^3 - 3x + 2 = (x-1)^2 (x+2)
    EXPECT_EQ(p.evaluate(1), 0);
    EXPECT_EQ(p.evaluate(-2), 0);
    EXPECT_EQ(p.evaluate(3), 20);
    EXPECT_EQ(p.shifted(1), P({0, 0, 3, 1}));
    EXPECT_EQ(p.derivative(), P({-3, 0, 3}));
}

TEST(Polynomial, ContentAndPrimitivePart) {
    const IntPolynomial p = P({-6, 4, -2});
    EXPECT_EQ(p.content(), 2);
    EXPECT_EQ(p.primitive_part(), P({3, -2, 1}));
}

TEST(Polynomial, Gcd) {
    const IntPolynomial a = P({-1, 0, 1}) * P({2, 1});   // (x-1)(x+1)(x+2)
    const IntPolynomial b = P({-1, 1}) * P({-3, 1}) * P({-3, 1});
    EXPECT_EQ(gcd(a, b), P({-1, 1}));
    EXPECT_EQ(gcd(a, IntPolynomial()), a);
    EXPECT_EQ(gcd(P({2, 4}), P({3, 6})), P({1, 2}));
    EXPECT_EQ(gcd(P({5}), P({-1, 1})), P({1}));
}

TEST(Polynomial, HomogeneousCompose) {
    // g = t^2 + 2t + 3 -> a^2 + 2ab + 3b^2
    const IntPolynomial g = P({3, 2, 1});
    const IntPolynomial a = P({0, 1}), b = P({1, 1});
    EXPECT_EQ(homogeneous_compose(g, a, b), a * a + BigInt(2) * (a * b) + BigInt(3) * (b * b));
}

TEST(Polynomial, StringRoundTrip) {
    const IntPolynomial p = P({-7, 0, 3, 1});
    EXPECT_EQ(to_coefficient_string(p), "-7 0 3 1");
    EXPECT_EQ(from_coefficient_string("-7 0 3 1"), p);
    EXPECT_THROW(from_coefficient_string("1 x"), std::invalid_argument);
    EXPECT_EQ(to_coefficient_string(IntPolynomial()), "0");
    EXPECT_EQ(to_pretty_string(p), "x^3 + 3x^2 - 7");
}

TEST(Polynomial, PowAndBigCoefficients) {
    const IntPolynomial p = pow(P({1, 1}), 70);
    EXPECT_EQ(p[35], BigInt("112186277816662845432"));
    EXPECT_EQ(p.evaluate(1), pow(BigInt(2), 70));
}
