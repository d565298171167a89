#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "sgcorona/matrix.hpp"

namespace sgcorona {

struct EigenDecomposition {
    /// Descending.
    std::vector<double> values;
    /// Column i of `vectors` belongs to values[i]; orthonormal.
    RealMatrix vectors;
};

struct JacobiOptions {
    /// Stop when the off-diagonal Frobenius norm drops below
    /// tolerance * max(1, ||M||_F).
    double tolerance = 1e-12;
    int max_sweeps = 100;
    double symmetry_tolerance = 1e-12;
};

/// Cyclic Jacobi rotations for a real symmetric matrix.
inline EigenDecomposition jacobi_eigen(const RealMatrix& input, const JacobiOptions& opt = {}) {
    if (!input.square()) throw std::invalid_argument("eigensolver needs a square matrix");
    const std::size_t n = input.rows();
    double fro2 = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            fro2 += input(i, j) * input(i, j);
            if (std::fabs(input(i, j) - input(j, i)) > opt.symmetry_tolerance)
                throw std::invalid_argument("eigensolver needs a symmetric matrix");
        }
    const double threshold = opt.tolerance * std::max(1.0, std::sqrt(fro2));

    RealMatrix a = input;
    RealMatrix v = RealMatrix::identity(n);
    auto off_norm = [&] {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += a(i, j) * a(i, j);
        return std::sqrt(s);
    };

    int sweep = 0;
    for (; off_norm() >= threshold; ++sweep) {
        if (sweep == opt.max_sweeps) throw std::runtime_error("Jacobi eigensolver did not converge");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = a(q, p) = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });
    EigenDecomposition out{std::vector<double>(n), RealMatrix(n, n)};
    for (std::size_t i = 0; i < n; ++i) {
        out.values[i] = a(order[i], order[i]);
        for (std::size_t k = 0; k < n; ++k) out.vectors(k, i) = v(k, order[i]);
    }
    return out;
}

}  // namespace sgcorona
