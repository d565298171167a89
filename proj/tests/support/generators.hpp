#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "sgcorona/core.hpp"
#include "sgcorona/families.hpp"

namespace sgcorona::testkit {

using Rng = std::mt19937_64;

inline int random_sign(Rng& rng) { return std::bernoulli_distribution(0.5)(rng) ? 1 : -1; }

inline SignedGraph random_signed_graph(Rng& rng, std::size_t n, double edge_probability = 0.5) {
    std::bernoulli_distribution edge(edge_probability);
    std::vector<SignedEdge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (edge(rng)) edges.push_back({i, j, random_sign(rng)});
    return SignedGraph(n, std::move(edges));
}

/// Order drawn uniformly from [lo, hi].
inline SignedGraph random_signed_graph_between(Rng& rng, std::size_t lo, std::size_t hi) {
    return random_signed_graph(rng, std::uniform_int_distribution<std::size_t>(lo, hi)(rng));
}

inline Marking random_marking(Rng& rng, std::size_t n) {
    std::vector<int> v(n);
    for (auto& x : v) x = random_sign(rng);
    return Marking(std::move(v));
}

inline SignedGraph random_resign(Rng& rng, const SignedGraph& g) {
    std::vector<int> s(g.size());
    for (auto& x : s) x = random_sign(rng);
    return families::resigned(g, s);
}

/// Random balanced graph: random underlying graph signed by a random marking.
inline SignedGraph random_balanced_graph(Rng& rng, std::size_t n) {
    const SignedGraph g = random_signed_graph(rng, n);
    return mu_signed_graph(g, random_marking(rng, n));
}

/// Underlying regular graphs used where a degree-regular factor is required.
inline std::vector<SignedGraph> regular_shapes() {
    using namespace families;
    return {empty(1),    path(2),     cycle(3),
            cycle(4),    cycle(5),    cycle(6),
            complete(4), disjoint_union(path(2), path(2)),
            disjoint_union(cycle(3), cycle(3)),
            complete_bipartite(3, 3)};
}

}  // namespace sgcorona::testkit
