#pragma once

// Exact characteristic polynomials and signed coronals.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sgcorona/core.hpp"
#include "sgcorona/matrix.hpp"
#include "sgcorona/polynomial.hpp"

namespace sgcorona {

/// det(xI - M) together with the numerator mu^T adj(xI - M) mu.
struct CharPolyWithForm {
    IntPolynomial char_poly;
    IntPolynomial form_numerator;
};

namespace detail {

/// Faddeev-LeVerrier over the integers. With N_1 = I and
///   c_{n-k} = -tr(M N_k) / k,   N_{k+1} = M N_k + c_{n-k} I,
/// det(xI - M) = sum c_j x^j and adj(xI - M) = sum_k N_k x^{n-k}.
/// Every division by k is exact. `form` (may be empty) selects the vector
/// for the adjugate quadratic form.
inline CharPolyWithForm faddeev_leverrier(const IntMatrix& m, const std::vector<int>& form) {
    if (!m.square()) throw std::invalid_argument("characteristic polynomial needs a square matrix");
    const std::size_t n = m.rows();
    std::vector<BigInt> c(n + 1);
    std::vector<BigInt> p(n);  // p[n-k] = form^T N_k form
    c[n] = 1;
    if (n == 0) return {IntPolynomial(std::move(c)), {}};

    Matrix<BigInt> nk = Matrix<BigInt>::identity(n);
    Matrix<BigInt> prod(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        if (!form.empty()) {
            BigInt q = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (nk(i, j) != 0) q += nk(i, j) * (form[i] * form[j]);
            p[n - k] = q;
        }
        // prod = M * N_k, skipping zero entries of M.
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) prod(i, j) = 0;
            for (std::size_t l = 0; l < n; ++l) {
                const std::int64_t mil = m(i, l);
                if (mil == 0) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (nk(l, j) != 0) prod(i, j) += nk(l, j) * mil;
            }
        }
        BigInt tr = prod.trace();
        BigInt q, r;
        boost::multiprecision::divide_qr(tr, BigInt(static_cast<long long>(k)), q, r);
        if (r != 0) throw std::logic_error("Faddeev-LeVerrier: inexact trace division");
        c[n - k] = -q;
        if (k < n) {
            nk = prod;
            for (std::size_t i = 0; i < n; ++i) nk(i, i) += c[n - k];
        }
    }
    return {IntPolynomial(std::move(c)), IntPolynomial(std::move(p))};
}

}  // namespace detail

/// det(xI - M), exact and monic.
inline IntPolynomial char_poly(const IntMatrix& m) { return detail::faddeev_leverrier(m, {}).char_poly; }

inline IntPolynomial char_poly(const SignedGraph& g, MatrixKind kind) { return char_poly(g.matrix(kind)); }

/// det(xI - M) and mu^T adj(xI - M) mu from one recurrence.
inline CharPolyWithForm char_poly_with_form(const IntMatrix& m, const Marking& mu) {
    if (m.rows() != mu.size()) throw std::invalid_argument("coronal: marking length does not match matrix order");
    return detail::faddeev_leverrier(m, {mu.values().begin(), mu.values().end()});
}

/// Reduced rational function numerator / denominator.
///
/// The denominator is monic (it divides a monic characteristic polynomial)
/// and shares no factor with the numerator. `removed_factor` is the gcd that
/// was cancelled, normalised so that numerator * removed_factor and
/// denominator * removed_factor give back the unreduced pair.
struct Coronal {
    IntPolynomial numerator;
    IntPolynomial denominator;
    IntPolynomial removed_factor;

    /// Order of the reduced denominator.
    long reduced_degree() const { return denominator.degree(); }

    friend bool operator==(const Coronal& a, const Coronal& b) {
        return a.numerator == b.numerator && a.denominator == b.denominator;
    }
};

/// Cancel gcd(p, f) from p / f. `f` must be non-zero.
inline Coronal reduce_ratio(const IntPolynomial& p, const IntPolynomial& f) {
    if (f.is_zero()) throw std::domain_error("coronal denominator is zero");
    IntPolynomial r = gcd(p, f);
    if (r.is_zero()) r = IntPolynomial::constant(1);
    // Fix the sign of r so the reduced denominator has positive leading coefficient.
    if ((f.leading() < 0) != (r.leading() < 0)) r = -r;
    Coronal out{exact_quotient(p, r), exact_quotient(f, r), r};
    // A non-monic f leaves a scalar common to both sides; strip it.
    const BigInt s = boost::multiprecision::gcd(out.numerator.content(), out.denominator.content());
    if (s > 1) {
        out.numerator = exact_quotient(out.numerator, IntPolynomial::constant(s));
        out.denominator = exact_quotient(out.denominator, IntPolynomial::constant(s));
        out.removed_factor *= s;
    }
    return out;
}

/// mu^T (xI - M)^{-1} mu, reduced.
inline Coronal coronal(const IntMatrix& m, const Marking& mu) {
    const auto cf = char_poly_with_form(m, mu);
    return reduce_ratio(cf.form_numerator, cf.char_poly);
}

/// Coronal of the named graph matrix with the canonical marking.
inline Coronal coronal(const SignedGraph& g, MatrixKind kind) {
    return coronal(g.matrix(kind), canonical_marking(g));
}

/// x -> x - 1 in numerator and denominator.
inline Coronal shifted_coronal(const Coronal& c) {
    return reduce_ratio(c.numerator.shifted(-1), c.denominator.shifted(-1));
}

/// Integer roots of `p` with multiplicity, given a bound on their absolute
/// value. Each candidate must divide the constant term of what is left;
/// division is exact synthetic division. `rest` receives the unfactored part.
inline std::vector<BigInt> integer_roots(IntPolynomial p, const BigInt& bound, IntPolynomial* rest = nullptr) {
    std::vector<BigInt> roots;
    while (p.degree() >= 1 && p[0] == 0) {
        roots.push_back(0);
        p = exact_quotient(p, IntPolynomial::x());
    }
    for (BigInt t = 1; t <= bound && p.degree() >= 1; ++t) {
        for (const BigInt& cand : {t, BigInt(-t)}) {
            while (p.degree() >= 1 && p[0] % cand == 0 && p.evaluate(cand) == 0) {
                roots.push_back(cand);
                p = exact_quotient(p, IntPolynomial::linear_factor(cand));
            }
        }
    }
    if (rest) *rest = p;
    return roots;
}

/// Multiplicity of `root` as a zero of p (p non-zero).
inline std::size_t root_multiplicity(IntPolynomial p, const BigInt& root) {
    std::size_t m = 0;
    while (!p.is_zero() && p.evaluate(root) == 0) {
        p = exact_quotient(p, IntPolynomial::linear_factor(root));
        ++m;
    }
    return m;
}

}  // namespace sgcorona
