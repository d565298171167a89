#pragma once

// Edge and triad statistics of g1 (*) g2: closed forms from the factors and
// brute-force counts on the built product, plus the edge-type test that
// decides balance of the product.

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "sgcorona/core.hpp"
#include "sgcorona/products.hpp"

namespace sgcorona {

/// Edge counts of g1 (*) g2 and the factor quantities they are built from.
///
/// n1_plus / n1_minus count the positively / negatively marked duplicate
/// vertices a_i, i.e. the endpoints of the join edges. (Every a_i carries the
/// mark of u_i, so the whole of D(g1) holds exactly twice as many of each.)
struct EdgeStats {
    std::int64_t total = 0, positive = 0, negative = 0;

    std::int64_t dup_edges = 0, dup_positive = 0, dup_negative = 0;           // |DE|, |DE+|, |DE-|
    std::int64_t factor_edges = 0, factor_positive = 0, factor_negative = 0;  // |E2|, |E2+|, |E2-|
    std::int64_t n1_plus = 0, n1_minus = 0, n2_plus = 0, n2_minus = 0;

    // Per region of the product: the n1 copies of g2, and the join edges a_i - v_j^i.
    std::int64_t copy_positive = 0, copy_negative = 0;
    std::int64_t join_positive = 0, join_negative = 0;

    friend bool operator==(const EdgeStats&, const EdgeStats&) = default;
};

/// Triangles classified by their number of negative edges.
struct TriadCounts {
    std::array<std::int64_t, 4> by_negatives{};

    std::int64_t total() const { return by_negatives[0] + by_negatives[1] + by_negatives[2] + by_negatives[3]; }
    std::int64_t operator[](std::size_t i) const { return by_negatives[i]; }

    friend bool operator==(const TriadCounts&, const TriadCounts&) = default;
};

/// Mark classes of an edge's endpoints.
enum class EndpointMarks { both_positive = 0, opposite = 1, both_negative = 2 };

struct TriadStats {
    TriadCounts product;
    TriadCounts dup;     // T_i(D g1)
    TriadCounts factor;  // T_i(g2)
    /// factor_edge_classes[s][c]: edges of g2 with sign s (0: +, 1: -) whose
    /// endpoint marks fall in class c (EndpointMarks).
    std::array<std::array<std::int64_t, 3>, 2> factor_edge_classes{};
    std::int64_t nu_plus = 0, nu_minus = 0;  // marked duplicate vertices
    std::int64_t factor_edges = 0;

    friend bool operator==(const TriadStats&, const TriadStats&) = default;
};

/// Brute-force triangle census.
inline TriadCounts enumerate_triads(const SignedGraph& g) {
    TriadCounts t;
    const std::size_t n = g.order();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            const int sab = g.sign(a, b);
            if (sab == 0) continue;
            for (std::size_t c = b + 1; c < n; ++c) {
                const int sac = g.sign(a, c), sbc = g.sign(b, c);
                if (sac == 0 || sbc == 0) continue;
                ++t.by_negatives[(sab < 0) + (sac < 0) + (sbc < 0)];
            }
        }
    return t;
}

namespace detail {

inline EndpointMarks endpoint_class(int mu, int mv) {
    if (mu != mv) return EndpointMarks::opposite;
    return mu > 0 ? EndpointMarks::both_positive : EndpointMarks::both_negative;
}

inline EdgeStats factor_columns(const SignedGraph& g1, const SignedGraph& g2) {
    EdgeStats s;
    const SignedGraph dup = duplication(g1);
    s.dup_edges = static_cast<std::int64_t>(dup.size());
    s.dup_positive = static_cast<std::int64_t>(dup.positive_size());
    s.dup_negative = static_cast<std::int64_t>(dup.negative_size());
    s.factor_edges = static_cast<std::int64_t>(g2.size());
    s.factor_positive = static_cast<std::int64_t>(g2.positive_size());
    s.factor_negative = static_cast<std::int64_t>(g2.negative_size());
    const Marking mu1 = canonical_marking(g1), mu2 = canonical_marking(g2);
    s.n1_plus = static_cast<std::int64_t>(mu1.count_positive());
    s.n1_minus = static_cast<std::int64_t>(mu1.count_negative());
    s.n2_plus = static_cast<std::int64_t>(mu2.count_positive());
    s.n2_minus = static_cast<std::int64_t>(mu2.count_negative());
    return s;
}

}  // namespace detail

/// Edge counts of g1 (*) g2 from the factor columns alone:
///   positive = |DE+| + |U(g1)| |E2+| + N1+ N2+ + N1- N2-
///   negative = |DE-| + |U(g1)| |E2-| + N1+ N2- + N1- N2+
///   total    = |DE|  + |U(g1)| |E2|  + |V1| |V2|
inline EdgeStats edge_stats_formula(const SignedGraph& g1, const SignedGraph& g2) {
    EdgeStats s = detail::factor_columns(g1, g2);
    const auto n1 = static_cast<std::int64_t>(g1.order());
    const auto n2 = static_cast<std::int64_t>(g2.order());
    s.copy_positive = n1 * s.factor_positive;
    s.copy_negative = n1 * s.factor_negative;
    s.join_positive = s.n1_plus * s.n2_plus + s.n1_minus * s.n2_minus;
    s.join_negative = s.n1_plus * s.n2_minus + s.n1_minus * s.n2_plus;
    s.positive = s.dup_positive + s.copy_positive + s.join_positive;
    s.negative = s.dup_negative + s.copy_negative + s.join_negative;
    s.total = s.dup_edges + n1 * s.factor_edges + n1 * n2;
    return s;
}

/// Same fields, counted on the built product region by region.
inline EdgeStats edge_stats_enumerated(const SignedGraph& g1, const SignedGraph& g2) {
    EdgeStats s = detail::factor_columns(g1, g2);
    const Product prod = add_vertex_corona(g1, g2);
    const ProductLayout& L = prod.layout;
    for (const auto& e : prod.graph.edges()) {
        const bool pos = e.sign > 0;
        ++s.total;
        ++(pos ? s.positive : s.negative);
        if (L.in_copy(e.u) && L.in_copy(e.v)) ++(pos ? s.copy_positive : s.copy_negative);
        else if (L.in_copy(e.u) || L.in_copy(e.v)) ++(pos ? s.join_positive : s.join_negative);
    }
    return s;
}

/// Triad census of g1 (*) g2 from the factor columns alone. For each
/// duplicate vertex a_i and edge jk of g2 the triangle a_i v_j^i v_k^i has
/// sign pattern fixed by mu1(u_i), sigma(jk) and the marks of j and k.
inline TriadStats triad_stats_formula(const SignedGraph& g1, const SignedGraph& g2) {
    TriadStats t;
    t.dup = enumerate_triads(duplication(g1));
    t.factor = enumerate_triads(g2);
    const Marking mu1 = canonical_marking(g1), mu2 = canonical_marking(g2);
    t.nu_plus = static_cast<std::int64_t>(mu1.count_positive());
    t.nu_minus = static_cast<std::int64_t>(mu1.count_negative());
    t.factor_edges = static_cast<std::int64_t>(g2.size());
    for (const auto& e : g2.edges())
        ++t.factor_edge_classes[e.sign > 0 ? 0 : 1][static_cast<std::size_t>(detail::endpoint_class(mu2[e.u], mu2[e.v]))];

    const auto& pos = t.factor_edge_classes[0];
    const auto& neg = t.factor_edge_classes[1];
    constexpr std::size_t pp = 0, pm = 1, mm = 2;
    const std::int64_t u = static_cast<std::int64_t>(g1.order());
    const std::int64_t np = t.nu_plus, nm = t.nu_minus;

    auto& out = t.product.by_negatives;
    out[0] = t.dup[0] + u * t.factor[0] + np * pos[pp] + nm * pos[mm];
    out[1] = t.dup[1] + u * t.factor[1] + np * (pos[pm] + neg[pp]) + nm * (pos[pm] + neg[mm]);
    out[2] = t.dup[2] + u * t.factor[2] + np * (pos[mm] + neg[pm]) + nm * (pos[pp] + neg[pm]);
    out[3] = t.dup[3] + u * t.factor[3] + np * neg[mm] + nm * neg[pp];
    return t;
}

/// |T(D g1)| + |U(g1)| (|T(g2)| + |E2|)
inline std::int64_t total_triads_formula(const SignedGraph& g1, const SignedGraph& g2) {
    return enumerate_triads(duplication(g1)).total() +
           static_cast<std::int64_t>(g1.order()) *
               (enumerate_triads(g2).total() + static_cast<std::int64_t>(g2.size()));
}

/// Same fields with the product census counted on the built product.
inline TriadStats triad_stats_enumerated(const SignedGraph& g1, const SignedGraph& g2) {
    TriadStats t = triad_stats_formula(g1, g2);
    t.product = enumerate_triads(add_vertex_corona(g1, g2).graph);
    return t;
}

enum class UnbalancingEdge {
    positive_opposite_marks = 1,
    negative_positive_marks = 2,
    negative_negative_marks = 3,
};

struct UnbalanceReport {
    /// Distinct types present, ascending.
    std::vector<UnbalancingEdge> types;
    /// Offending edges of g2, in edge order.
    std::vector<SignedEdge> edges;
    /// g2 itself is unbalanced, so every product with it is too.
    bool factor_unbalanced = false;

    bool product_balanced() const { return types.empty(); }
};

/// Edges of g2 (canonical marks) whose sign differs from the product of its
/// endpoint marks. Each one closes a negative triangle with a_i in every
/// copy; with none, g1 (*) g2 is balanced.
inline UnbalanceReport unbalance_criteria(const SignedGraph& g2) {
    UnbalanceReport r;
    r.factor_unbalanced = !is_balanced(g2).balanced;
    const Marking mu = canonical_marking(g2);
    std::array<bool, 4> seen{};
    for (const auto& e : g2.edges()) {
        const int mu_u = mu[e.u], mu_v = mu[e.v];
        if (e.sign == mu_u * mu_v) continue;
        const UnbalancingEdge type = e.sign > 0 ? UnbalancingEdge::positive_opposite_marks
                                     : mu_u > 0 ? UnbalancingEdge::negative_positive_marks
                                                : UnbalancingEdge::negative_negative_marks;
        seen[static_cast<std::size_t>(type)] = true;
        r.edges.push_back(e);
    }
    for (std::size_t i = 1; i <= 3; ++i)
        if (seen[i]) r.types.push_back(static_cast<UnbalancingEdge>(i));
    return r;
}

}  // namespace sgcorona
