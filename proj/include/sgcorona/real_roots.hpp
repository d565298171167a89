#pragma once

// Real roots of integer polynomials whose roots are all real (characteristic
// polynomials of symmetric matrices and their factors). Multiplicities come
// from an exact square-free decomposition; each square-free part is isolated
// with a Sturm sequence and refined by bisection, with every sign decided
// exactly at dyadic rational points.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "sgcorona/polynomial.hpp"

namespace sgcorona {

struct SquareFreeFactor {
    IntPolynomial factor;
    std::size_t multiplicity = 0;
};

/// Yun's algorithm: f = c * prod factor_i^i with pairwise coprime square-free
/// factors. Constant factors are omitted.
inline std::vector<SquareFreeFactor> square_free_decomposition(const IntPolynomial& f) {
    std::vector<SquareFreeFactor> out;
    if (f.degree() < 1) return out;
    const IntPolynomial p = f.primitive_part();
    const IntPolynomial dp = p.derivative();
    const IntPolynomial a0 = gcd(p, dp).primitive_part();
    IntPolynomial b = exact_quotient(p, a0);
    IntPolynomial c = exact_quotient(dp, a0);
    IntPolynomial d = c - b.derivative();
    for (std::size_t i = 1; b.degree() >= 1; ++i) {
        const IntPolynomial a = gcd(b, d).primitive_part();
        b = exact_quotient(b, a);
        c = exact_quotient(d, a);
        d = c - b.derivative();
        if (a.degree() >= 1) out.push_back({a, i});
    }
    return out;
}

namespace detail {

/// Sign of p(m / 2^e).
inline int sign_at(const IntPolynomial& p, const BigInt& m, unsigned e) {
    if (p.is_zero()) return 0;
    const auto& c = p.coefficients();
    const std::size_t d = c.size() - 1;
    BigInt acc = c[d];
    for (std::size_t k = d; k-- > 0;) {
        acc *= m;
        acc += BigInt(c[k]) << static_cast<unsigned>(e * (d - k));
    }
    return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

inline std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& q) {
    std::vector<IntPolynomial> seq{q, q.derivative()};
    while (seq.back().degree() >= 1) {
        const IntPolynomial& a = seq[seq.size() - 2];
        const IntPolynomial& b = seq.back();
        IntPolynomial r = pseudo_remainder(a, b);
        // prem scales by lc(b)^(da - db + 1); undo its sign, then negate.
        const long delta = a.degree() - b.degree() + 1;
        if (b.leading() < 0 && delta % 2 != 0) r = -r;
        r = -r;
        if (r.is_zero()) break;
        r = exact_quotient(r, IntPolynomial::constant(r.content()));
        seq.push_back(std::move(r));
    }
    return seq;
}

inline int sign_variations(const std::vector<IntPolynomial>& seq, const BigInt& m, unsigned e) {
    int count = 0, last = 0;
    for (const auto& p : seq) {
        const int s = sign_at(p, m, e);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

/// Smallest k with every root strictly inside (-2^k, 2^k), from Fujiwara's
/// bound 2 max |a_{d-i} / a_d|^(1/i) using bit lengths only.
inline unsigned root_bound_exponent(const IntPolynomial& q) {
    const long d = q.degree();
    const long lead_bits = static_cast<long>(boost::multiprecision::msb(abs(q.leading())));
    long best = 0;
    for (long i = 1; i <= d; ++i) {
        const BigInt a = abs(q[static_cast<std::size_t>(d - i)]);
        if (a == 0) continue;
        const long diff = static_cast<long>(boost::multiprecision::msb(a)) + 1 - lead_bits;
        const long e = diff <= 0 ? 0 : (diff + i - 1) / i;
        best = std::max(best, e);
    }
    return static_cast<unsigned>(best + 2);
}

inline double to_double(const BigInt& m, unsigned e) {
    return std::ldexp(m.convert_to<double>(), -static_cast<int>(e));
}

/// Distinct real roots of a square-free q, ascending.
inline std::vector<double> isolate_square_free(const IntPolynomial& q, double tolerance) {
    std::vector<double> roots;
    if (q.degree() < 1) return roots;
    const auto seq = sturm_sequence(q);
    const unsigned k = root_bound_exponent(q);

    struct Interval {
        BigInt lo, hi;
        unsigned e;
    };
    // Each interval is (lo, hi] / 2^e. Depth-first, lower half first.
    std::vector<Interval> stack{{-(BigInt(1) << k), BigInt(1) << k, 0}};
    while (!stack.empty()) {
        Interval iv = std::move(stack.back());
        stack.pop_back();
        const int count = sign_variations(seq, iv.lo, iv.e) - sign_variations(seq, iv.hi, iv.e);
        if (count <= 0) continue;
        const int s_lo = sign_at(q, iv.lo, iv.e), s_hi = sign_at(q, iv.hi, iv.e);
        if (count == 1 && s_hi == 0) {
            roots.push_back(to_double(iv.hi, iv.e));
            continue;
        }
        if (count == 1 && s_lo * s_hi < 0) {
            BigInt lo = iv.lo, hi = iv.hi;
            unsigned e = iv.e;
            while (true) {
                const double width = to_double(hi - lo, e);
                const double scale = std::max(1.0, std::fabs(to_double(hi, e)));
                if (width <= tolerance * scale) break;
                lo <<= 1;
                hi <<= 1;
                ++e;
                const BigInt mid = (lo + hi) >> 1;
                const int s_mid = sign_at(q, mid, e);
                if (s_mid == 0) {
                    lo = hi = mid;
                    break;
                }
                (s_mid == s_lo ? lo : hi) = mid;
            }
            roots.push_back(to_double((lo + hi), e + 1));
            continue;
        }
        // Several roots, or a single root whose endpoint signs do not bracket it yet.
        const BigInt mid = iv.lo + iv.hi;
        stack.push_back({mid, iv.hi << 1, iv.e + 1});
        stack.push_back({iv.lo << 1, mid, iv.e + 1});
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace detail

/// All real roots of p with multiplicity, sorted descending. Roots are
/// refined to `tolerance` relative to max(1, |root|). Non-real roots are
/// not reported, so for a real-rooted p the result has deg p entries.
inline std::vector<double> real_roots(const IntPolynomial& p, double tolerance = 1e-14) {
    if (p.is_zero()) throw std::domain_error("the zero polynomial has no finite root set");
    std::vector<double> out;
    for (const auto& [factor, mult] : square_free_decomposition(p))
        for (double r : detail::isolate_square_free(factor, tolerance)) out.insert(out.end(), mult, r);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace sgcorona
