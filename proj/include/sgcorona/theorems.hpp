#pragma once

// Characteristic polynomials of g1 (*) g2 assembled from the factors alone,
// without building the product. Each rational closed form is multiplied
// through by the power of the factor's characteristic polynomial that
// clears its coronal, so the result is an integer polynomial that can be
// compared coefficient by coefficient with char_poly of the built product.

#include <cstddef>
#include <stdexcept>
#include <string>

#include "sgcorona/charpoly.hpp"
#include "sgcorona/core.hpp"

namespace sgcorona {

/// char_poly(A(g_mu)^2) for g_mu the mu-signed graph of g under its
/// canonical marking; its roots are the squared eigenvalues of g_mu.
inline IntPolynomial squared_mu_char_poly(const SignedGraph& g) {
    const IntMatrix a = mu_signed_graph(g, canonical_marking(g)).adjacency();
    return char_poly(a * a);
}

/// Adjacency version from explicit ingredients: `squares` has the squared
/// eigenvalues of the duplicated factor as roots, (f2, p2) is the
/// unreduced adjacency coronal of g2. Returns
///   sum_k squares_k (x^2 f2 - x p2)^k f2^(n1 - k).
inline IntPolynomial corona_char_poly_A(const IntPolynomial& squares, const CharPolyWithForm& g2) {
    const IntPolynomial x = IntPolynomial::x();
    const IntPolynomial c = x * x * g2.char_poly - x * g2.form_numerator;
    return homogeneous_compose(squares, c, g2.char_poly);
}

/// f(A(g1 (*) g2), x) = prod (x - l2_i)^n1 prod (x^2 - x chi_A(g2)(x) - l1'_i^2).
inline IntPolynomial product_char_poly_A(const SignedGraph& g1, const SignedGraph& g2) {
    return corona_char_poly_A(squared_mu_char_poly(g1),
                              char_poly_with_form(g2.adjacency(), canonical_marking(g2)));
}

namespace detail {

inline std::size_t require_regular(const SignedGraph& g1, MatrixKind kind) {
    const auto reg = regularity(g1);
    if (!reg.degree_regular)
        throw std::invalid_argument(std::string("the ") + matrix_letter(kind) +
                                    "-theorem needs a degree-regular first factor (regularity hypothesis)");
    return *reg.degree_regular;
}

/// L and Q share one form: with F(x) = f_M(x-1), P(x) = p_M(x-1),
///   c = (x - r1) ((x - r1 - n2) F - P),   result = sum_k g_k c^k F^(n1-k).
inline IntPolynomial laplacian_like_char_poly(const SignedGraph& g1, const SignedGraph& g2, MatrixKind kind) {
    const std::size_t r1 = require_regular(g1, kind);
    const auto cf = char_poly_with_form(g2.matrix(kind), canonical_marking(g2));
    const IntPolynomial big_f = cf.char_poly.shifted(-1);
    const IntPolynomial big_p = cf.form_numerator.shifted(-1);
    const BigInt r(static_cast<unsigned long long>(r1));
    const BigInt n2(static_cast<unsigned long long>(g2.order()));
    const IntPolynomial x_r = IntPolynomial::linear_factor(r);
    const IntPolynomial c = x_r * (IntPolynomial::linear_factor(r + n2) * big_f - big_p);
    return homogeneous_compose(squared_mu_char_poly(g1), c, big_f);
}

}  // namespace detail

/// f(L(g1 (*) g2); x) for r1-regular g1. Throws std::invalid_argument otherwise.
inline IntPolynomial product_char_poly_L(const SignedGraph& g1, const SignedGraph& g2) {
    return detail::laplacian_like_char_poly(g1, g2, MatrixKind::laplacian);
}

/// f(Q(g1 (*) g2); x) for r1-regular g1. Throws std::invalid_argument otherwise.
inline IntPolynomial product_char_poly_Q(const SignedGraph& g1, const SignedGraph& g2) {
    return detail::laplacian_like_char_poly(g1, g2, MatrixKind::signless_laplacian);
}

inline IntPolynomial product_char_poly(const SignedGraph& g1, const SignedGraph& g2, MatrixKind kind) {
    switch (kind) {
        case MatrixKind::adjacency: return product_char_poly_A(g1, g2);
        case MatrixKind::laplacian: return product_char_poly_L(g1, g2);
        case MatrixKind::signless_laplacian: return product_char_poly_Q(g1, g2);
    }
    throw std::invalid_argument("unknown matrix kind");
}

}  // namespace sgcorona
