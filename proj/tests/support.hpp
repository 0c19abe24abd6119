#pragma once

// Shared test helpers: seeded random graphs and small named graphs.

#include <cstdint>
#include <random>

#include "domset/graph.hpp"

namespace domset::testing {

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
    std::bernoulli_distribution edge(p);
    GraphBuilder b(n);
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u)
            if (edge(rng))
                b.add_edge(u, v);
    return std::move(b).build();
}

inline Graph graph_of(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> es) {
    GraphBuilder b(n);
    for (auto [u, v] : es)
        b.add_edge(u, v);
    return std::move(b).build();
}

/// 0-1-2-3-0
inline Graph c4() { return graph_of(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

} // namespace domset::testing
