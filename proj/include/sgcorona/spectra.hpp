#pragma once

// Spectra, energy, integrality, the closed-form spectra of g1 (*) g2 for
// co-regular and star second factors, and the equienergetic construction.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgcorona/charpoly.hpp"
#include "sgcorona/core.hpp"
#include "sgcorona/jacobi.hpp"
#include "sgcorona/products.hpp"
#include "sgcorona/real_roots.hpp"
#include "sgcorona/theorems.hpp"

namespace sgcorona {

struct Spectrum {
    /// Descending, repeated according to multiplicity.
    std::vector<double> eigenvalues;
    std::optional<MatrixKind> source;

    std::size_t size() const { return eigenvalues.size(); }
    double sum() const {
        double s = 0;
        for (double x : eigenvalues) s += x;
        return s;
    }
};

inline Spectrum eig_sym(const RealMatrix& m) { return {jacobi_eigen(m).values, std::nullopt}; }
inline Spectrum eig_sym(const IntMatrix& m) { return eig_sym(m.cast<double>()); }

inline Spectrum spectrum(const SignedGraph& g, MatrixKind kind) {
    Spectrum s = eig_sym(g.matrix(kind));
    s.source = kind;
    return s;
}

/// Largest elementwise difference of two spectra after sorting; infinity
/// when the sizes differ.
inline double max_abs_difference(std::vector<double> a, std::vector<double> b) {
    if (a.size() != b.size()) return HUGE_VAL;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::fabs(a[i] - b[i]));
    return d;
}

struct EnergyReport {
    double energy = 0;
    Spectrum spectrum;
};

/// Sum of the absolute adjacency eigenvalues.
inline EnergyReport energy(const SignedGraph& g) {
    EnergyReport r{0, spectrum(g, MatrixKind::adjacency)};
    for (double x : r.spectrum.eigenvalues) r.energy += std::fabs(x);
    return r;
}

struct IntegralityReport {
    bool integral = false;
    /// Descending; filled only when integral.
    std::vector<long long> eigenvalues;
};

/// Exact decision: the adjacency characteristic polynomial must split into
/// integer linear factors. Eigenvalues are bounded by the maximum degree.
inline IntegralityReport is_integral(const SignedGraph& g) {
    std::size_t max_degree = 0;
    for (std::size_t v = 0; v < g.order(); ++v) max_degree = std::max(max_degree, g.degree(v));
    IntPolynomial rest;
    const auto roots = integer_roots(char_poly(g.adjacency()), BigInt(max_degree), &rest);
    IntegralityReport r;
    r.integral = rest.degree() <= 0;
    if (r.integral) {
        for (const auto& x : roots) r.eigenvalues.push_back(x.convert_to<long long>());
        std::sort(r.eigenvalues.begin(), r.eigenvalues.end(), std::greater<>());
    }
    return r;
}

/// Exact: equal characteristic polynomials of the chosen matrix.
inline bool cospectral(const SignedGraph& g1, const SignedGraph& g2, MatrixKind kind) {
    return g1.order() == g2.order() && char_poly(g1, kind) == char_poly(g2, kind);
}

/// Spectrum of g1 (*) g2 for (r, k)-co-regular g2, assembled from
///  - every eigenvalue of g2 other than k, n1 times each;
///  - k, n1 (p - 1) times, where p is its multiplicity in g2;
///  - the roots of x^3 - k x^2 - (n2 + l'^2) x + k l'^2 for each eigenvalue l' of g1_mu.
/// Cubic roots come from the exact product of the n1 cubics.
inline Spectrum corollary_coregular_spectrum(const SignedGraph& g1, const SignedGraph& g2) {
    const auto reg = regularity(g2);
    if (!reg.co_regular_pair) throw std::invalid_argument("second factor is not co-regular");
    const BigInt k(reg.co_regular_pair->second);
    const std::size_t n1 = g1.order();
    const BigInt n2(static_cast<unsigned long long>(g2.order()));

    const IntPolynomial f2 = char_poly(g2.adjacency());
    const std::size_t p = root_multiplicity(f2, k);
    if (p == 0) throw std::invalid_argument("net degree is not an adjacency eigenvalue of the second factor");

    Spectrum s{{}, MatrixKind::adjacency};
    const IntPolynomial others = exact_quotient(f2, pow(IntPolynomial::linear_factor(k), p));
    for (double x : real_roots(others)) s.eigenvalues.insert(s.eigenvalues.end(), n1, x);
    s.eigenvalues.insert(s.eigenvalues.end(), n1 * (p - 1), k.convert_to<double>());

    const IntPolynomial x = IntPolynomial::x();
    const IntPolynomial cubic_free = x * x * x - k * (x * x) - n2 * x;  // terms without l'^2
    const IntPolynomial cubic_scale = IntPolynomial::linear_factor(k);  // coefficient of -l'^2
    if (n1 > 0)
        for (double r : real_roots(homogeneous_compose(squared_mu_char_poly(g1), cubic_free, cubic_scale)))
            s.eigenvalues.push_back(r);
    std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), std::greater<>());
    return s;
}

/// Spectrum of g1 (*) K_{1,n2} for balanced g1, where the star's center has
/// canonical mark `center_mark`: 0 with multiplicity n1 (n2 - 1), and the
/// roots of x^4 - (2 n2 + 1 + l^2) x^2 - 2 n2 mu(v1) x + n2 l^2 for each
/// adjacency eigenvalue l of g1.
inline Spectrum corollary_star_spectrum(const SignedGraph& g1, std::size_t n2, int center_mark) {
    require_sign(center_mark, "center mark");
    if (n2 == 0) throw std::invalid_argument("star needs at least one leaf");
    if (!is_balanced(g1).balanced) throw std::invalid_argument("the star formula needs a balanced first factor");
    const std::size_t n1 = g1.order();
    const BigInt n(static_cast<unsigned long long>(n2));

    Spectrum s{std::vector<double>(n1 * (n2 - 1), 0.0), MatrixKind::adjacency};
    const IntPolynomial x = IntPolynomial::x();
    const IntPolynomial x2 = x * x;
    const IntPolynomial quartic_free = x2 * x2 - (2 * n + 1) * x2 - (2 * n * center_mark) * x;
    const IntPolynomial quartic_scale = x2 - IntPolynomial::constant(n);
    const IntMatrix a = g1.adjacency();
    if (n1 > 0)
        for (double r : real_roots(homogeneous_compose(char_poly(a * a), quartic_free, quartic_scale)))
            s.eigenvalues.push_back(r);
    std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), std::greater<>());
    return s;
}

struct EquienergeticReport {
    static constexpr double input_tolerance = 1e-8;
    static constexpr double product_tolerance = 1e-6;

    /// One entry per failed precondition.
    std::vector<std::string> violations;
    /// Both factors are r-regular for the same r yet their coronals differ.
    bool regular_with_distinct_coronals = false;

    double input_energy_1 = 0, input_energy_2 = 0;
    std::optional<Product> product_1, product_2;
    double product_energy_1 = 0, product_energy_2 = 0;
    bool products_cospectral = false;

    bool admissible() const { return violations.empty(); }
    bool products_equienergetic() const {
        return std::fabs(product_energy_1 - product_energy_2) <= product_tolerance;
    }
    /// Preconditions hold and the products are equienergetic but not cospectral.
    bool holds() const { return admissible() && products_equienergetic() && !products_cospectral; }
};

/// Builds g (*) h1 and g (*) h2 when h1, h2 have equal order, equal reduced
/// adjacency coronals, equal energy and distinct spectra.
inline EquienergeticReport equienergetic_product_pair(const SignedGraph& g, const SignedGraph& h1,
                                                      const SignedGraph& h2) {
    EquienergeticReport r;
    if (h1.order() != h2.order()) r.violations.emplace_back("factors have different orders");
    const Coronal c1 = coronal(h1, MatrixKind::adjacency);
    const Coronal c2 = coronal(h2, MatrixKind::adjacency);
    if (!(c1 == c2)) r.violations.emplace_back("coronal mismatch");
    r.input_energy_1 = energy(h1).energy;
    r.input_energy_2 = energy(h2).energy;
    if (std::fabs(r.input_energy_1 - r.input_energy_2) > EquienergeticReport::input_tolerance)
        r.violations.emplace_back("energy mismatch");
    if (cospectral(h1, h2, MatrixKind::adjacency)) r.violations.emplace_back("factors are cospectral");

    const auto reg1 = regularity(h1), reg2 = regularity(h2);
    r.regular_with_distinct_coronals =
        reg1.degree_regular && reg2.degree_regular && *reg1.degree_regular == *reg2.degree_regular && !(c1 == c2);

    if (!r.admissible()) return r;
    r.product_1 = add_vertex_corona(g, h1);
    r.product_2 = add_vertex_corona(g, h2);
    r.product_energy_1 = energy(r.product_1->graph).energy;
    r.product_energy_2 = energy(r.product_2->graph).energy;
    r.products_cospectral = cospectral(r.product_1->graph, r.product_2->graph, MatrixKind::adjacency);
    return r;
}

}  // namespace sgcorona
