#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace domset {

using Vertex = std::size_t;
using Word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;
/// Largest order accepted by graph construction.
inline constexpr std::size_t kMaxVertices = 4096;

inline constexpr std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

/// A subset of {0, ..., n-1} stored as a bit mask.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : universe_(universe), words_(words_for(universe), 0) {}
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
    VertexSet(std::size_t universe, std::span<const Word> words);

    /// Build from a single-word mask; bits at or above `universe` must be clear.
    static VertexSet from_mask(std::size_t universe, Word mask);
    static VertexSet full(std::size_t universe);

    std::size_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept;
    bool empty() const noexcept { return size() == 0; }
    bool contains(Vertex v) const noexcept {
        return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1u) != 0;
    }
    void insert(Vertex v);
    void erase(Vertex v);

    std::span<const Word> words() const noexcept { return words_; }
    /// Members in increasing order.
    std::vector<Vertex> members() const;
    bool is_subset_of(const VertexSet& other) const;

    VertexSet& operator|=(const VertexSet& other);
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::size_t universe_ = 0;
    std::vector<Word> words_;
};

/// Immutable simple undirected graph; adjacency rows are bit-packed.
class Graph {
public:
    Graph() = default;

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return m_; }
    std::size_t words_per_row() const noexcept { return stride_; }

    std::span<const Word> row(Vertex v) const { return {adjacency_.data() + v * stride_, stride_}; }
    bool adjacent(Vertex u, Vertex v) const;
    std::size_t degree(Vertex v) const;
    bool has_isolated_vertex() const;

    VertexSet open_neighborhood(Vertex v) const;
    VertexSet closed_neighborhood(Vertex v) const;
    /// Neighbour lists in increasing order.
    std::vector<Vertex> neighbors(Vertex v) const;

    /// Single-word neighbourhood masks; requires order() <= 64.
    Word open_mask(Vertex v) const { return adjacency_[v * stride_]; }
    Word closed_mask(Vertex v) const { return adjacency_[v * stride_] | (Word{1} << v); }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend class GraphBuilder;
    std::size_t n_ = 0;
    std::size_t stride_ = 0;
    std::size_t m_ = 0;
    std::vector<Word> adjacency_;
};

/// Single-owner mutable phase that produces an immutable Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n);
    explicit GraphBuilder(const Graph& g);

    std::size_t order() const noexcept { return g_.n_; }
    /// Adds {u, v}; existing edges are a no-op. Loops and out-of-range endpoints throw Errc::invalid_edge.
    GraphBuilder& add_edge(Vertex u, Vertex v);
    GraphBuilder& remove_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const { return g_.adjacent(u, v); }

    Graph build() const& { return g_; }
    Graph build() && { return std::move(g_); }

private:
    void check(Vertex u, Vertex v) const;
    Graph g_;
};

/// Edgeless graph on n vertices.
Graph new_graph(std::size_t n);
/// K_r; r = 0 throws Errc::infeasible_order.
Graph complete_graph(std::size_t r);
/// Cycle 0-1-...-(r-1)-0, r >= 3.
Graph cycle_graph(std::size_t r);
/// Vertices of h are shifted by g.order(); no edges between the parts.
Graph disjoint_union(const Graph& g, const Graph& h);
/// Vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Every edge {u, v} with u < v, ordered by (v, u): the graph6 bit order.
std::vector<std::pair<Vertex, Vertex>> edges(const Graph& g);

} // namespace domset
