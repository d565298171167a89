#pragma once

// Named graph families. Signs default to +1; pass one sign per edge in the
// listed edge order to get other signatures.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "sgcorona/core.hpp"

namespace sgcorona::families {

namespace detail {
inline SignedGraph assign(std::size_t n, std::vector<SignedEdge> edges, const std::vector<int>& signs) {
    if (!signs.empty()) {
        if (signs.size() != edges.size()) throw std::invalid_argument("one sign per edge expected");
        for (std::size_t i = 0; i < edges.size(); ++i) edges[i].sign = signs[i];
    }
    return SignedGraph(n, std::move(edges));
}
}  // namespace detail

inline SignedGraph empty(std::size_t n) { return SignedGraph(n); }

/// P_n: path on n vertices, edges (0,1), (1,2), ...
inline SignedGraph path(std::size_t n, const std::vector<int>& signs = {}) {
    std::vector<SignedEdge> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, 1});
    return detail::assign(n, std::move(e), signs);
}

/// C_n (n >= 3): edges (0,1), ..., (n-2,n-1), then (n-1,0).
inline SignedGraph cycle(std::size_t n, const std::vector<int>& signs = {}) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<SignedEdge> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, 1});
    e.push_back({n - 1, 0, 1});
    return detail::assign(n, std::move(e), signs);
}

/// K_n, edges in lexicographic order.
inline SignedGraph complete(std::size_t n, const std::vector<int>& signs = {}) {
    std::vector<SignedEdge> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) e.push_back({i, j, 1});
    return detail::assign(n, std::move(e), signs);
}

/// K_{1,n}: center 0, leaves 1..n.
inline SignedGraph star(std::size_t leaves, const std::vector<int>& signs = {}) {
    std::vector<SignedEdge> e;
    for (std::size_t i = 1; i <= leaves; ++i) e.push_back({0, i, 1});
    return detail::assign(leaves + 1, std::move(e), signs);
}

/// K_{1,n} whose center has canonical mark `center_mark`: all edges positive
/// except the first, which is negative when center_mark is -1.
inline SignedGraph signed_star(std::size_t leaves, int center_mark) {
    require_sign(center_mark, "center mark");
    if (leaves == 0) throw std::invalid_argument("signed star needs at least one leaf");
    std::vector<int> signs(leaves, 1);
    signs[0] = center_mark;
    return star(leaves, signs);
}

/// K_{a,b}: parts 0..a-1 and a..a+b-1.
inline SignedGraph complete_bipartite(std::size_t a, std::size_t b, const std::vector<int>& signs = {}) {
    std::vector<SignedEdge> e;
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j) e.push_back({i, a + j, 1});
    return detail::assign(a + b, std::move(e), signs);
}

inline SignedGraph disjoint_union(const SignedGraph& g, const SignedGraph& h) {
    std::vector<SignedEdge> e(g.edges().begin(), g.edges().end());
    for (const auto& x : h.edges()) e.push_back({x.u + g.order(), x.v + g.order(), x.sign});
    return SignedGraph(g.order() + h.order(), std::move(e));
}

/// Same underlying graph with signs replaced edge by edge (edges in sorted order).
inline SignedGraph resigned(const SignedGraph& g, const std::vector<int>& signs) {
    return detail::assign(g.order(), {g.edges().begin(), g.edges().end()}, signs);
}

/// Every signature of g's underlying graph; bit i of the index makes sorted edge i negative.
inline std::vector<SignedGraph> all_signings(const SignedGraph& g) {
    const std::size_t m = g.size();
    if (m > 20) throw std::invalid_argument("too many edges to enumerate signatures");
    std::vector<SignedGraph> out;
    out.reserve(std::size_t{1} << m);
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        std::vector<int> signs(m);
        for (std::size_t i = 0; i < m; ++i) signs[i] = (mask >> i) & 1 ? -1 : 1;
        out.push_back(resigned(g, signs));
    }
    return out;
}

}  // namespace sgcorona::families
