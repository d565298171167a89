#pragma once

// Signed graph data model: signs, markings, switching, balance, regularity.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sgcorona/matrix.hpp"

namespace sgcorona {

enum class MatrixKind { adjacency, laplacian, signless_laplacian };

inline char matrix_letter(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::adjacency: return 'A';
        case MatrixKind::laplacian: return 'L';
        case MatrixKind::signless_laplacian: return 'Q';
    }
    return '?';
}

/// Undirected edge {u, v} with u < v and sign +1 or -1.
struct SignedEdge {
    std::size_t u = 0;
    std::size_t v = 0;
    int sign = 1;

    friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
    friend auto operator<=>(const SignedEdge&, const SignedEdge&) = default;
};

inline void require_sign(int s, const char* what) {
    if (s != 1 && s != -1) throw std::invalid_argument(std::string(what) + ": sign must be +1 or -1");
}

/// A vertex labelling by +1/-1.
class Marking {
public:
    Marking() = default;
    explicit Marking(std::vector<int> values) : values_(std::move(values)) {
        for (int v : values_) require_sign(v, "marking");
    }

    static Marking all_positive(std::size_t n) { return Marking(std::vector<int>(n, 1)); }

    std::size_t size() const noexcept { return values_.size(); }
    int operator[](std::size_t i) const { return values_[i]; }
    std::span<const int> values() const noexcept { return values_; }

    std::size_t count_positive() const {
        return static_cast<std::size_t>(std::count(values_.begin(), values_.end(), 1));
    }
    std::size_t count_negative() const { return size() - count_positive(); }

    /// diag(values); squares to the identity.
    IntMatrix diagonal() const {
        IntMatrix d(size(), size());
        for (std::size_t i = 0; i < size(); ++i) d(i, i) = values_[i];
        return d;
    }

    friend bool operator==(const Marking&, const Marking&) = default;

private:
    std::vector<int> values_;
};

/// Simple undirected graph with +1/-1 edge signs. Vertices are 0..n-1.
///
/// Loops, parallel edges and out-of-range endpoints are rejected at
/// construction. Edges are stored sorted with u < v, so two graphs compare
/// equal exactly when their signed edge sets coincide.
class SignedGraph {
public:
    SignedGraph() = default;

    explicit SignedGraph(std::size_t n, std::vector<SignedEdge> edges = {})
        : n_(n), adj_(n * n, 0) {
        for (auto& e : edges) {
            if (e.u >= n || e.v >= n)
                throw std::invalid_argument("edge endpoint out of range");
            if (e.u == e.v) throw std::invalid_argument("loops are not allowed");
            require_sign(e.sign, "edge");
            if (e.u > e.v) std::swap(e.u, e.v);
            auto& slot = adj_[e.u * n + e.v];
            if (slot != 0) throw std::invalid_argument("parallel edges are not allowed");
            slot = static_cast<std::int8_t>(e.sign);
            adj_[e.v * n + e.u] = static_cast<std::int8_t>(e.sign);
        }
        std::sort(edges.begin(), edges.end());
        edges_ = std::move(edges);
    }

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }
    std::span<const SignedEdge> edges() const noexcept { return edges_; }

    /// Sign of edge uv, or 0 when u and v are not adjacent.
    int sign(std::size_t u, std::size_t v) const { return adj_[u * n_ + v]; }
    bool adjacent(std::size_t u, std::size_t v) const { return sign(u, v) != 0; }

    std::vector<std::size_t> neighbors(std::size_t v) const {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < n_; ++w)
            if (adjacent(v, w)) out.push_back(w);
        return out;
    }

    std::size_t positive_degree(std::size_t v) const { return count_row(v, 1); }
    std::size_t negative_degree(std::size_t v) const { return count_row(v, -1); }
    std::size_t degree(std::size_t v) const { return positive_degree(v) + negative_degree(v); }
    long signed_degree(std::size_t v) const {
        return static_cast<long>(positive_degree(v)) - static_cast<long>(negative_degree(v));
    }

    std::size_t positive_size() const {
        return static_cast<std::size_t>(
            std::count_if(edges_.begin(), edges_.end(), [](const SignedEdge& e) { return e.sign > 0; }));
    }
    std::size_t negative_size() const { return size() - positive_size(); }

    IntMatrix adjacency() const {
        IntMatrix a(n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) a(i, j) = sign(i, j);
        return a;
    }

    /// A, L = D - A or Q = D + A.
    IntMatrix matrix(MatrixKind kind) const {
        IntMatrix m = adjacency();
        if (kind == MatrixKind::adjacency) return m;
        const std::int64_t s = kind == MatrixKind::laplacian ? -1 : 1;
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) m(i, j) *= s;
            m(i, i) = static_cast<std::int64_t>(degree(i));
        }
        return m;
    }

    friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t count_row(std::size_t v, int s) const {
        std::size_t c = 0;
        for (std::size_t w = 0; w < n_; ++w) c += adj_[v * n_ + w] == s;
        return c;
    }

    std::size_t n_ = 0;
    std::vector<SignedEdge> edges_;
    std::vector<std::int8_t> adj_;
};

/// Canonical marking: product of the signs of the edges at each vertex.
/// An isolated vertex gets +1.
inline Marking canonical_marking(const SignedGraph& g) {
    std::vector<int> m(g.order(), 1);
    for (const auto& e : g.edges()) {
        m[e.u] *= e.sign;
        m[e.v] *= e.sign;
    }
    return Marking(std::move(m));
}

/// Same underlying graph, every edge uv re-signed to m(u) m(v).
inline SignedGraph mu_signed_graph(const SignedGraph& g, const Marking& m) {
    if (m.size() != g.order()) throw std::invalid_argument("marking length does not match graph order");
    std::vector<SignedEdge> edges;
    edges.reserve(g.size());
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v, m[e.u] * m[e.v]});
    return SignedGraph(g.order(), std::move(edges));
}

/// Multiply each edge sign by theta(u) theta(v).
inline SignedGraph switching(const SignedGraph& g, const Marking& theta) {
    if (theta.size() != g.order()) throw std::invalid_argument("switching function length does not match graph order");
    std::vector<SignedEdge> edges;
    edges.reserve(g.size());
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.sign * theta[e.u] * theta[e.v]});
    return SignedGraph(g.order(), std::move(edges));
}

struct BalanceResult {
    bool balanced = true;
    /// Set when balanced: sigma(uv) = witness(u) witness(v) on every edge.
    std::optional<Marking> witness;
    /// Set when unbalanced: the edge whose sign contradicts the propagated marks.
    std::optional<SignedEdge> violating_edge;
    /// Set when unbalanced: vertices of a negative cycle through violating_edge.
    std::vector<std::size_t> negative_cycle;
};

/// Harary's criterion. BFS from the lowest unvisited vertex with root mark
/// +1 propagates mu(w) = sigma(vw) mu(v); the first contradiction found
/// closes a negative cycle.
inline BalanceResult is_balanced(const SignedGraph& g) {
    const std::size_t n = g.order();
    std::vector<int> mark(n, 0);
    std::vector<std::size_t> parent(n, n);
    std::vector<std::size_t> depth(n, 0);

    for (std::size_t root = 0; root < n; ++root) {
        if (mark[root] != 0) continue;
        mark[root] = 1;
        std::queue<std::size_t> queue;
        queue.push(root);
        while (!queue.empty()) {
            const std::size_t v = queue.front();
            queue.pop();
            for (std::size_t w = 0; w < n; ++w) {
                const int s = g.sign(v, w);
                if (s == 0) continue;
                if (mark[w] == 0) {
                    mark[w] = s * mark[v];
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    queue.push(w);
                } else if (mark[w] != s * mark[v]) {
                    BalanceResult r;
                    r.balanced = false;
                    r.violating_edge = SignedEdge{std::min(v, w), std::max(v, w), s};
                    // Walk both tree paths up to their lowest common ancestor.
                    std::vector<std::size_t> left{v}, right{w};
                    std::size_t a = v, b = w;
                    while (depth[a] > depth[b]) left.push_back(a = parent[a]);
                    while (depth[b] > depth[a]) right.push_back(b = parent[b]);
                    while (a != b) {
                        left.push_back(a = parent[a]);
                        right.push_back(b = parent[b]);
                    }
                    right.pop_back();
                    r.negative_cycle = std::move(left);
                    r.negative_cycle.insert(r.negative_cycle.end(), right.rbegin(), right.rend());
                    return r;
                }
            }
        }
    }
    BalanceResult r;
    r.witness = Marking(std::move(mark));
    return r;
}

struct RegularityReport {
    std::optional<std::size_t> degree_regular;
    std::optional<long> net_regular;
    std::optional<std::pair<std::size_t, long>> co_regular_pair;
};

/// Degree and net-degree uniformity. The empty graph reports nothing.
inline RegularityReport regularity(const SignedGraph& g) {
    RegularityReport r;
    if (g.order() == 0) return r;
    const std::size_t d0 = g.degree(0);
    const long k0 = g.signed_degree(0);
    bool deg_ok = true, net_ok = true;
    for (std::size_t v = 1; v < g.order(); ++v) {
        deg_ok = deg_ok && g.degree(v) == d0;
        net_ok = net_ok && g.signed_degree(v) == k0;
    }
    if (deg_ok) r.degree_regular = d0;
    if (net_ok) r.net_regular = k0;
    if (deg_ok && net_ok) r.co_regular_pair = std::make_pair(d0, k0);
    return r;
}

/// Vertex sets of the connected components, each sorted, ordered by smallest vertex.
inline std::vector<std::vector<std::size_t>> connected_components(const SignedGraph& g) {
    const std::size_t n = g.order();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> comp{s};
        seen[s] = true;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (std::size_t w = 0; w < n; ++w)
                if (!seen[w] && g.adjacent(comp[i], w)) {
                    seen[w] = true;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

/// Subgraph induced on `vertices`, relabelled 0..k-1 in the given order.
inline SignedGraph induced_subgraph(const SignedGraph& g, std::span<const std::size_t> vertices) {
    std::vector<SignedEdge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (const int s = g.sign(vertices[i], vertices[j]); s != 0) edges.push_back({i, j, s});
    return SignedGraph(vertices.size(), std::move(edges));
}

}  // namespace sgcorona
