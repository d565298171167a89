#pragma once

// Duplication signed graph and the two duplication corona products.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "sgcorona/core.hpp"

namespace sgcorona {

/// Vertex positions inside a duplication corona product of g1 (order n1) and
/// g2 (order n2):
///   u_i   -> i                      (original vertices of g1)
///   a_i   -> n1 + i                 (duplicate vertices)
///   v_j^i -> 2 n1 + j n1 + i        (vertex j of the i-th copy of g2)
/// so that the block of n1 positions after the duplication block is
/// W_j = {v_j^1, ..., v_j^n1}. All indices are 0-based.
struct ProductLayout {
    std::size_t n1 = 0;
    std::size_t n2 = 0;

    std::size_t u(std::size_t i) const { return i; }
    std::size_t a(std::size_t i) const { return n1 + i; }
    std::size_t v(std::size_t copy, std::size_t j) const { return 2 * n1 + j * n1 + copy; }
    std::size_t order() const { return n1 * (2 + n2); }

    bool is_original(std::size_t x) const { return x < n1; }
    bool is_duplicate(std::size_t x) const { return x >= n1 && x < 2 * n1; }
    bool in_copy(std::size_t x) const { return x >= 2 * n1; }
    /// For x in a copy block: (copy index, vertex of g2).
    std::pair<std::size_t, std::size_t> copy_position(std::size_t x) const {
        const std::size_t off = x - 2 * n1;
        return {off % n1, off / n1};
    }

    friend bool operator==(const ProductLayout&, const ProductLayout&) = default;
};

struct Product {
    SignedGraph graph;
    ProductLayout layout;
};

namespace detail {

inline std::vector<SignedEdge> duplication_edges(const SignedGraph& g, const Marking& mu) {
    const std::size_t n = g.order();
    std::vector<SignedEdge> edges;
    edges.reserve(2 * g.size());
    for (const auto& e : g.edges()) {
        const int s = mu[e.u] * mu[e.v];
        edges.push_back({n + e.u, e.v, s});  // a_u - u_v
        edges.push_back({n + e.v, e.u, s});  // a_v - u_u
    }
    return edges;
}

enum class JoinAt { duplicate, original };

inline Product corona(const SignedGraph& g1, const SignedGraph& g2, JoinAt join) {
    const Marking mu1 = canonical_marking(g1);
    const Marking mu2 = canonical_marking(g2);
    const ProductLayout layout{g1.order(), g2.order()};

    std::vector<SignedEdge> edges = duplication_edges(g1, mu1);
    for (std::size_t i = 0; i < layout.n1; ++i) {
        for (const auto& e : g2.edges()) edges.push_back({layout.v(i, e.u), layout.v(i, e.v), e.sign});
        const std::size_t hub = join == JoinAt::duplicate ? layout.a(i) : layout.u(i);
        for (std::size_t j = 0; j < layout.n2; ++j) edges.push_back({hub, layout.v(i, j), mu1[i] * mu2[j]});
    }
    return {SignedGraph(layout.order(), std::move(edges)), layout};
}

}  // namespace detail

/// D(g): vertices u_1..u_n then a_1..a_n. Each edge u_i u_j of g becomes
/// a_i - u_j and a_j - u_i, signed mu(u_i) mu(u_j) with mu canonical on g
/// (a_i carries the mark of u_i). The edges of g itself are dropped.
inline SignedGraph duplication(const SignedGraph& g) {
    return SignedGraph(2 * g.order(), detail::duplication_edges(g, canonical_marking(g)));
}

/// g1 (*) g2: D(g1), n1 copies of g2, and a_i joined to every vertex of
/// copy i with sign mu1(u_i) mu2(v_j) (canonical marks of the factors).
inline Product add_vertex_corona(const SignedGraph& g1, const SignedGraph& g2) {
    return detail::corona(g1, g2, detail::JoinAt::duplicate);
}

/// g1 (o) g2: as add_vertex_corona, but copy i hangs off u_i.
inline Product vertex_corona(const SignedGraph& g1, const SignedGraph& g2) {
    return detail::corona(g1, g2, detail::JoinAt::original);
}

/// Relabel vertices: vertex x of g becomes perm[x].
inline SignedGraph relabel(const SignedGraph& g, const std::vector<std::size_t>& perm) {
    if (perm.size() != g.order()) throw std::invalid_argument("permutation length does not match graph order");
    std::vector<bool> hit(perm.size(), false);
    for (std::size_t p : perm) {
        if (p >= perm.size() || hit[p]) throw std::invalid_argument("not a permutation");
        hit[p] = true;
    }
    std::vector<SignedEdge> edges;
    edges.reserve(g.size());
    for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v], e.sign});
    return SignedGraph(g.order(), std::move(edges));
}

struct SwitchingIsomorphism {
    /// bijection[x] = image in g1 (o) g2 of vertex x of g1 (*) g2.
    std::vector<std::size_t> bijection;
    Marking theta;
};

/// Explicit switching isomorphism from g1 (*) g2 onto g1 (o) g2: swap u_i and
/// a_i, fix every copy vertex, switch by the all-positive function. The
/// result is checked edge for edge; std::logic_error means the constructions
/// disagree, which is a bug rather than bad input.
inline SwitchingIsomorphism switching_iso_witness(const SignedGraph& g1, const SignedGraph& g2) {
    const Product add = add_vertex_corona(g1, g2);
    const Product ver = vertex_corona(g1, g2);
    const ProductLayout& L = add.layout;

    SwitchingIsomorphism w;
    w.bijection.resize(L.order());
    for (std::size_t x = 0; x < L.order(); ++x) w.bijection[x] = x;
    for (std::size_t i = 0; i < L.n1; ++i) {
        w.bijection[L.u(i)] = L.a(i);
        w.bijection[L.a(i)] = L.u(i);
    }
    w.theta = Marking::all_positive(L.order());

    if (switching(relabel(add.graph, w.bijection), w.theta) != ver.graph)
        throw std::logic_error("switching isomorphism witness failed verification");
    return w;
}

}  // namespace sgcorona
