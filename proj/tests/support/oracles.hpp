#pragma once

// Independent reference computations for the tests. None of these share a
// code path with the library routines they check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cmath>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sgcorona/sgcorona.hpp"

namespace sgcorona::testkit {

using Rational = boost::multiprecision::cpp_rational;

/// Fraction-free Gaussian elimination (Bareiss).
inline BigInt bareiss_det(Matrix<BigInt> m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && m(r, k) == 0) ++r;
            if (r == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

/// The polynomial of degree <= values.size()-1 through (t, values[t]), t = 0, 1, ...
/// Coefficients must come out integral.
inline IntPolynomial interpolate_integer_nodes(const std::vector<BigInt>& values) {
    const std::size_t n = values.size();
    std::vector<Rational> dd(values.begin(), values.end());
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long long>(level));
    // Newton form -> monomial basis, nodes 0..n-1.
    std::vector<Rational> coef(1, dd[n - 1]);
    for (std::size_t k = n - 1; k-- > 0;) {
        std::vector<Rational> next(coef.size() + 1);
        for (std::size_t i = 0; i < coef.size(); ++i) {
            next[i + 1] += coef[i];
            next[i] -= coef[i] * Rational(static_cast<long long>(k));
        }
        next[0] += dd[k];
        coef = std::move(next);
    }
    std::vector<BigInt> out;
    for (const auto& c : coef) {
        if (denominator(c) != 1) throw std::logic_error("interpolant is not integral");
        out.push_back(numerator(c));
    }
    return IntPolynomial(std::move(out));
}

inline Matrix<BigInt> shifted_negation(const IntMatrix& m, long long t) {
    Matrix<BigInt> b(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) b(i, j) = (i == j ? t : 0) - m(i, j);
    return b;
}

/// det(tI - M) sampled at t = 0..n and interpolated.
inline IntPolynomial charpoly_oracle(const IntMatrix& m) {
    std::vector<BigInt> vals;
    for (std::size_t t = 0; t <= m.rows(); ++t) vals.push_back(bareiss_det(shifted_negation(m, static_cast<long long>(t))));
    return interpolate_integer_nodes(vals);
}

/// mu^T adj(tI - M) mu = det(tI - M + mu mu^T) - det(tI - M)  (matrix determinant lemma).
inline IntPolynomial coronal_numerator_oracle(const IntMatrix& m, const Marking& mu) {
    std::vector<BigInt> vals;
    for (std::size_t t = 0; t <= m.rows(); ++t) {
        Matrix<BigInt> b = shifted_negation(m, static_cast<long long>(t));
        const BigInt base = bareiss_det(b);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) b(i, j) += mu[i] * mu[j];
        vals.push_back(bareiss_det(b) - base);
    }
    return interpolate_integer_nodes(vals);
}

/// Cross-multiplied equality of p1/f1 and p2/f2.
inline bool same_ratio(const IntPolynomial& p1, const IntPolynomial& f1, const IntPolynomial& p2, const IntPolynomial& f2) {
    return p1 * f2 == p2 * f1;
}

// ---------------------------------------------------------------------------
// Equienergetic search over connected signed graphs on up to max_order
// vertices (underlying graphs up to isomorphism, every signature). Polynomials are
// handled through their values at t = 0..12, which pins down anything of
// degree <= 12 and so decides both f1 == f2 and p1 f2 == p2 f1 at order <= 6.

inline std::int64_t bareiss_det_small(std::vector<std::int64_t> m, std::size_t n) {
    if (n == 0) return 1;
    std::int64_t prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k * n + k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r * n + k] == 0) ++r;
            if (r == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[r * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
        prev = m[k * n + k];
    }
    return sign * m[n * n - 1];
}

/// Graphs on n vertices up to isomorphism, as all-positive signed graphs.
inline std::vector<SignedGraph> graphs_up_to_iso(std::size_t n, bool connected_only) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    const std::size_t m = slots.size();
    std::vector<std::vector<std::size_t>> slot_index(n, std::vector<std::size_t>(n));
    for (std::size_t s = 0; s < m; ++s) slot_index[slots[s].first][slots[s].second] = slot_index[slots[s].second][slots[s].first] = s;

    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    std::vector<SignedGraph> out;
    std::vector<bool> seen(std::size_t{1} << m, false);
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        if (seen[mask]) continue;
        std::vector<SignedEdge> edges;
        for (std::size_t s = 0; s < m; ++s)
            if (mask >> s & 1) edges.push_back({slots[s].first, slots[s].second, 1});
        for (const auto& perm : perms) {
            std::size_t image = 0;
            for (std::size_t s = 0; s < m; ++s)
                if (mask >> s & 1) image |= std::size_t{1} << slot_index[perm[slots[s].first]][perm[slots[s].second]];
            seen[image] = true;
        }
        SignedGraph g(n, std::move(edges));
        if (!connected_only || connected_components(g).size() == 1) out.push_back(std::move(g));
    }
    return out;
}

struct EquienergeticSearch {
    std::size_t graphs_scanned = 0;
    /// Number of (spectrum, spectrum) combinations with equal order, energy
    /// and coronal; one representative pair is kept for the first max_pairs.
    std::size_t classes_found = 0;
    std::vector<std::pair<SignedGraph, SignedGraph>> pairs;
};

inline EquienergeticSearch search_equienergetic_pairs(std::size_t max_order, std::size_t max_pairs,
                                                      bool connected_only = true) {
    constexpr std::size_t kPoints = 13;
    using Values = std::array<std::int64_t, kPoints>;
    struct Candidate {
        SignedGraph g;
        double energy;
    };
    EquienergeticSearch result;
    for (std::size_t n = 1; n <= max_order; ++n) {
        std::vector<Candidate> cands;
        for (const auto& shape : graphs_up_to_iso(n, connected_only))
            for (auto& g : families::all_signings(shape)) {
                double e = 0;
                for (double x : jacobi_eigen(g.adjacency().cast<double>()).values) e += std::fabs(x);
                cands.push_back({std::move(g), e});
            }
        result.graphs_scanned += cands.size();
        std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) { return a.energy < b.energy; });

        for (std::size_t lo = 0; lo < cands.size();) {
            std::size_t hi = lo + 1;
            while (hi < cands.size() && cands[hi].energy - cands[hi - 1].energy <= 1e-9) ++hi;
            if (hi - lo >= 2) {
                // f values -> distinct p values -> representative
                std::map<Values, std::map<Values, std::size_t>> by_spectrum;
                for (std::size_t i = lo; i < hi; ++i) {
                    const SignedGraph& g = cands[i].g;
                    const Marking mu = canonical_marking(g);
                    Values f{}, pv{};
                    for (std::size_t t = 0; t < kPoints; ++t) {
                        std::vector<std::int64_t> b(n * n), c(n * n);
                        for (std::size_t r = 0; r < n; ++r)
                            for (std::size_t q = 0; q < n; ++q) {
                                b[r * n + q] = (r == q ? static_cast<std::int64_t>(t) : 0) - g.sign(r, q);
                                c[r * n + q] = b[r * n + q] + mu[r] * mu[q];
                            }
                        f[t] = bareiss_det_small(b, n);
                        pv[t] = bareiss_det_small(c, n) - f[t];
                    }
                    by_spectrum[f].emplace(pv, i);
                }
                for (auto a = by_spectrum.begin(); a != by_spectrum.end(); ++a)
                    for (auto b = std::next(a); b != by_spectrum.end(); ++b) {
                        std::optional<std::pair<std::size_t, std::size_t>> hit;
                        for (const auto& [p1, i1] : a->second)
                            for (const auto& [p2, i2] : b->second) {
                                if (hit) break;
                                bool same = true;
                                for (std::size_t t = 0; t < kPoints && same; ++t)
                                    same = p1[t] * b->first[t] == p2[t] * a->first[t];
                                if (same) hit = std::make_pair(i1, i2);
                            }
                        if (!hit) continue;
                        ++result.classes_found;
                        if (result.pairs.size() < max_pairs) result.pairs.emplace_back(cands[hit->first].g, cands[hit->second].g);
                    }
            }
            lo = hi;
        }
    }
    return result;
}

}  // namespace sgcorona::testkit
