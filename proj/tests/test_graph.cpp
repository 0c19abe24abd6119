#include <doctest.h>

#include <algorithm>
#include <random>

#include "domset/error.hpp"
#include "domset/graph.hpp"
#include "support.hpp"

using namespace domset;
using domset::testing::c4;
using domset::testing::random_graph;

namespace {

std::vector<std::size_t> degree_multiset(const Graph& g) {
    std::vector<std::size_t> d;
    for (Vertex v = 0; v < g.order(); ++v)
        d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

void check_invariants(const Graph& g) {
    std::size_t bits = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        CHECK_FALSE(g.adjacent(v, v));
        for (Vertex u = 0; u < g.order(); ++u)
            CHECK(g.adjacent(u, v) == g.adjacent(v, u));
        bits += g.degree(v);
    }
    CHECK(bits == 2 * g.size());
}

} // namespace

TEST_CASE("new_graph is edgeless") {
    CHECK(new_graph(0).order() == 0);
    CHECK(new_graph(0).size() == 0);
    const Graph g = new_graph(3);
    CHECK(g.order() == 3);
    CHECK(g.size() == 0);
    CHECK(new_graph(5).size() == 0);
}

TEST_CASE("add_edge is symmetric, idempotent and rejects loops") {
    GraphBuilder b(2);
    b.add_edge(0, 1);
    CHECK(b.build().size() == 1);
    b.add_edge(1, 0);
    CHECK(b.build().size() == 1);
    CHECK(b.build().adjacent(1, 0));

    GraphBuilder c(3);
    CHECK_THROWS_AS(c.add_edge(2, 2), Error);
    try {
        c.add_edge(0, 3);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::invalid_edge);
    }
    CHECK_THROWS_AS(GraphBuilder(kMaxVertices + 1), Error);
}

TEST_CASE("closed neighbourhoods") {
    CHECK(complete_graph(3).closed_neighborhood(0).members() == std::vector<Vertex>{0, 1, 2});
    CHECK(new_graph(3).closed_neighborhood(0).members() == std::vector<Vertex>{0});
    CHECK(c4().closed_neighborhood(0).members() == std::vector<Vertex>{0, 1, 3});
    CHECK_THROWS_AS(c4().closed_neighborhood(4), Error);
}

TEST_CASE("disjoint union") {
    const Graph k2 = complete_graph(2);
    const Graph u = disjoint_union(k2, k2);
    CHECK(u.order() == 4);
    CHECK(u.size() == 2);
    CHECK(u.adjacent(2, 3));
    CHECK_FALSE(u.adjacent(1, 2));

    CHECK(disjoint_union(c4(), new_graph(0)) == c4());
    const Graph k3c4 = disjoint_union(complete_graph(3), c4());
    CHECK(k3c4.order() == 7);
    CHECK(k3c4.size() == 7);
}

TEST_CASE("complete graphs") {
    CHECK(complete_graph(1).order() == 1);
    CHECK(complete_graph(4).size() == 6);
    CHECK_THROWS_AS(complete_graph(0), Error);
}

TEST_CASE("wide graphs use multi-word rows") {
    GraphBuilder b(130);
    b.add_edge(0, 129).add_edge(64, 65);
    const Graph g = std::move(b).build();
    CHECK(g.words_per_row() == 3);
    CHECK(g.adjacent(129, 0));
    CHECK(g.closed_neighborhood(64).members() == std::vector<Vertex>{64, 65});
}

TEST_CASE("randomized invariants") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 90;
        const Graph g = random_graph(rng, n, 0.3);
        check_invariants(g);
        for (Vertex v = 0; v < n; ++v) {
            const VertexSet cn = g.closed_neighborhood(v);
            CHECK(cn.contains(v));
            CHECK(cn.size() == g.degree(v) + 1);
        }
    }
}

TEST_CASE("disjoint union is associative up to relabeling") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph a = random_graph(rng, rng() % 10, 0.5);
        const Graph b = random_graph(rng, rng() % 10, 0.5);
        const Graph c = random_graph(rng, rng() % 10, 0.5);
        const Graph left = disjoint_union(disjoint_union(a, b), c);
        const Graph right = disjoint_union(a, disjoint_union(b, c));
        CHECK(left.order() == right.order());
        CHECK(left.size() == right.size());
        CHECK(degree_multiset(left) == degree_multiset(right));
        check_invariants(left);
    }
}

TEST_CASE("vertex sets") {
    VertexSet s(5, {0, 3});
    CHECK(s.size() == 2);
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(4));
    CHECK_THROWS_AS(s.insert(5), Error);
    CHECK(VertexSet::from_mask(5, 0b1001) == s);
    CHECK_THROWS_AS(VertexSet::from_mask(3, 0b1000), Error);
    CHECK(VertexSet::full(70).size() == 70);
    CHECK(s.is_subset_of(VertexSet::full(5)));
}
