#include "domset/graph.hpp"

#include <algorithm>
#include <string>

#include "domset/error.hpp"

namespace domset {

namespace {

void require_vertex_cap(std::size_t n) {
    if (n > kMaxVertices)
        throw Error(Errc::size_limit,
                    "graph order " + std::to_string(n) + " exceeds the cap of " + std::to_string(kMaxVertices));
}

} // namespace

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members)
        insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const Word> words) : VertexSet(universe) {
    std::copy_n(words.begin(), std::min(words.size(), words_.size()), words_.begin());
    if (universe_ % kWordBits != 0 && !words_.empty())
        words_.back() &= (Word{1} << (universe_ % kWordBits)) - 1;
}

VertexSet VertexSet::from_mask(std::size_t universe, Word mask) {
    VertexSet s(universe);
    if (universe > kWordBits)
        throw Error(Errc::size_limit, "single-word mask used for a universe larger than 64");
    if (universe < kWordBits && (mask >> universe) != 0)
        throw Error(Errc::out_of_range, "mask sets bits outside the vertex range");
    if (!s.words_.empty())
        s.words_[0] = mask;
    return s;
}

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t i = 0; i < s.words_.size(); ++i)
        s.words_[i] = ~Word{0};
    if (universe % kWordBits != 0)
        s.words_.back() = (Word{1} << (universe % kWordBits)) - 1;
    return s;
}

std::size_t VertexSet::size() const noexcept {
    std::size_t total = 0;
    for (Word w : words_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

void VertexSet::insert(Vertex v) {
    if (v >= universe_)
        throw Error(Errc::out_of_range, "vertex " + std::to_string(v) + " outside set universe");
    words_[v / kWordBits] |= Word{1} << (v % kWordBits);
}

void VertexSet::erase(Vertex v) {
    if (v < universe_)
        words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        Word w = words_[i];
        while (w != 0) {
            out.push_back(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    if (other.universe_ != universe_)
        return false;
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & ~other.words_[i]) != 0)
            return false;
    return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    if (other.universe_ != universe_)
        throw Error(Errc::out_of_range, "set union over different universes");
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_)
        return false;
    return ((adjacency_[u * stride_ + v / kWordBits] >> (v % kWordBits)) & 1u) != 0;
}

std::size_t Graph::degree(Vertex v) const {
    std::size_t d = 0;
    for (Word w : row(v))
        d += static_cast<std::size_t>(std::popcount(w));
    return d;
}

bool Graph::has_isolated_vertex() const {
    for (Vertex v = 0; v < n_; ++v) {
        const auto r = row(v);
        if (std::all_of(r.begin(), r.end(), [](Word w) { return w == 0; }))
            return true;
    }
    return false;
}

VertexSet Graph::open_neighborhood(Vertex v) const {
    if (v >= n_)
        throw Error(Errc::out_of_range, "vertex " + std::to_string(v) + " out of range");
    return VertexSet(n_, row(v));
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
    VertexSet s = open_neighborhood(v);
    s.insert(v);
    return s;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const { return open_neighborhood(v).members(); }

GraphBuilder::GraphBuilder(std::size_t n) {
    require_vertex_cap(n);
    g_.n_ = n;
    g_.stride_ = words_for(n);
    g_.adjacency_.assign(n * g_.stride_, 0);
}

GraphBuilder::GraphBuilder(const Graph& g) : g_(g) {}

void GraphBuilder::check(Vertex u, Vertex v) const {
    if (u >= g_.n_ || v >= g_.n_)
        throw Error(Errc::invalid_edge, "edge {" + std::to_string(u) + "," + std::to_string(v) +
                                            "} has an endpoint outside 0.." + std::to_string(g_.n_));
    if (u == v)
        throw Error(Errc::invalid_edge, "loop at vertex " + std::to_string(u));
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
    check(u, v);
    if (g_.adjacent(u, v))
        return *this;
    g_.adjacency_[u * g_.stride_ + v / kWordBits] |= Word{1} << (v % kWordBits);
    g_.adjacency_[v * g_.stride_ + u / kWordBits] |= Word{1} << (u % kWordBits);
    ++g_.m_;
    return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v) {
    check(u, v);
    if (!g_.adjacent(u, v))
        return *this;
    g_.adjacency_[u * g_.stride_ + v / kWordBits] &= ~(Word{1} << (v % kWordBits));
    g_.adjacency_[v * g_.stride_ + u / kWordBits] &= ~(Word{1} << (u % kWordBits));
    --g_.m_;
    return *this;
}

Graph new_graph(std::size_t n) { return GraphBuilder(n).build(); }

Graph complete_graph(std::size_t r) {
    if (r == 0)
        throw Error(Errc::infeasible_order, "complete graph needs at least one vertex");
    GraphBuilder b(r);
    for (Vertex v = 1; v < r; ++v)
        for (Vertex u = 0; u < v; ++u)
            b.add_edge(u, v);
    return std::move(b).build();
}

Graph cycle_graph(std::size_t r) {
    if (r < 3)
        throw Error(Errc::infeasible_order, "cycle needs at least three vertices");
    GraphBuilder b(r);
    for (Vertex v = 0; v < r; ++v)
        b.add_edge(v, (v + 1) % r);
    return std::move(b).build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const std::size_t offset = g.order();
    GraphBuilder b(offset + h.order());
    for (auto [u, v] : edges(g))
        b.add_edge(u, v);
    for (auto [u, v] : edges(h))
        b.add_edge(u + offset, v + offset);
    return std::move(b).build();
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    if (perm.size() != g.order())
        throw Error(Errc::out_of_range, "permutation length does not match graph order");
    GraphBuilder b(g.order());
    for (auto [u, v] : edges(g))
        b.add_edge(perm[u], perm[v]);
    return std::move(b).build();
}

std::vector<std::pair<Vertex, Vertex>> edges(const Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(g.size());
    for (Vertex v = 1; v < g.order(); ++v)
        for (Vertex u = 0; u < v; ++u)
            if (g.adjacent(u, v))
                out.emplace_back(u, v);
    return out;
}

} // namespace domset
