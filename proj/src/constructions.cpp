#include "domset/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "domset/error.hpp"

namespace domset {

namespace {

// Complete multipartite graph over consecutive parts of the given sizes.
void add_multipartite(GraphBuilder& b, std::span<const std::size_t> parts, std::size_t offset) {
    std::vector<std::size_t> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p)
        part_of.insert(part_of.end(), parts[p], p);
    for (Vertex v = 0; v < part_of.size(); ++v)
        for (Vertex u = 0; u < v; ++u)
            if (part_of[u] != part_of[v])
                b.add_edge(offset + u, offset + v);
}

void add_extremal(GraphBuilder& b, std::size_t offset, std::size_t r) {
    std::vector<std::size_t> parts;
    if (r % 2 == 1)
        parts.push_back(3);
    while (std::accumulate(parts.begin(), parts.end(), std::size_t{0}) < r)
        parts.push_back(2);
    add_multipartite(b, parts, offset);
    if (r % 2 == 1)
        b.add_edge(offset, offset + 1);
}

void add_complete(GraphBuilder& b, std::size_t offset, std::size_t r) {
    for (Vertex v = 1; v < r; ++v)
        for (Vertex u = 0; u < v; ++u)
            b.add_edge(offset + u, offset + v);
}

} // namespace

Graph cocktail_party(std::size_t n) {
    if (n < 4 || n % 2 != 0)
        throw Error(Errc::infeasible_order, "cocktail party graph needs an even order of at least 4, got " +
                                                std::to_string(n));
    GraphBuilder b(n);
    add_extremal(b, 0, n);
    return std::move(b).build();
}

Graph extremal_gamma2(std::size_t r) {
    if (r < 4)
        throw Error(Errc::infeasible_order, "extremal gamma-2 graph needs at least 4 vertices, got " + std::to_string(r));
    GraphBuilder b(r);
    add_extremal(b, 0, r);
    return std::move(b).build();
}

BigInt max_dominating_pairs(std::size_t n) {
    if (n < 4)
        throw Error(Errc::domain, "closed form holds for n >= 4, got " + std::to_string(n));
    BigInt pairs = binomial(n, 2);
    if (n % 2 == 1)
        pairs -= 1;
    return pairs;
}

BigInt max_total_dominating_pairs(std::size_t n) {
    if (n < 4)
        throw Error(Errc::domain, "closed form holds for n >= 4, got " + std::to_string(n));
    const BigInt big_n = n;
    const BigInt base = big_n * (big_n - 2);
    return BigInt(n % 2 == 0 ? base : base - 3) / 2;
}

BigInt max_edges_gamma2(std::size_t n) {
    if (n < 3)
        throw Error(Errc::domain, "edge bound holds for n >= 3, got " + std::to_string(n));
    const BigInt big_n = n;
    const BigInt base = big_n * (big_n - 2);
    return BigInt(n % 2 == 0 ? base : base - 1) / 2;
}

bool is_feasible(std::size_t n, std::size_t x) noexcept {
    if (x == 0)
        return false;
    if (x == 1)
        return n >= 1;
    if (x == 2)
        return n >= 4;
    return x % 2 == 0 ? n >= 2 * x : n >= 2 * x - 1;
}

void require_feasible(std::size_t n, std::size_t x) {
    if (!is_feasible(n, x))
        throw Error(Errc::infeasible_order,
                    "no component graph of order " + std::to_string(n) + " with domination number " + std::to_string(x));
}

PartitionPlan prescribed_plan(std::size_t n, std::size_t x) {
    require_feasible(n, x);
    if (x == 1)
        return PartitionPlan::from_components({complete_component(n)});
    if (x == 2)
        return PartitionPlan::from_components({extremal_component(n)});

    const std::size_t pairs = x / 2;
    const bool odd = x % 2 == 1;
    // Trim n to the largest n' with 2n'/x integral, split it exactly, then hand
    // out the leftover vertices one at a time: extremal parts by index, then
    // the complete part, cyclically.
    const std::size_t unit = odd ? x : pairs;
    const std::size_t trimmed = n - n % unit;
    std::vector<std::size_t> sizes(pairs, odd ? 2 * trimmed / x : trimmed / pairs);
    std::size_t clique = odd ? trimmed / x : 0;
    const std::size_t slots = pairs + (odd ? 1 : 0);
    for (std::size_t i = 0; i < n - trimmed; ++i) {
        const std::size_t slot = i % slots;
        if (slot < pairs)
            ++sizes[slot];
        else
            ++clique;
    }
    // Near the feasibility boundary the split can leave an extremal part below
    // four vertices; move vertices into it from the clique, then from the largest part.
    for (auto& s : sizes) {
        while (s < 4) {
            if (clique > 1) {
                --clique;
            } else {
                auto donor = std::max_element(sizes.begin(), sizes.end());
                --*donor;
            }
            ++s;
        }
    }

    std::vector<Component> components;
    for (std::size_t s : sizes)
        components.push_back(extremal_component(s));
    if (odd)
        components.push_back(complete_component(clique));
    return PartitionPlan::from_components(std::move(components));
}

Graph realize(const PartitionPlan& plan) {
    GraphBuilder b(plan.n);
    std::size_t offset = 0;
    for (const auto& c : plan.components) {
        if (c.kind == ComponentKind::complete)
            add_complete(b, offset, c.size);
        else
            add_extremal(b, offset, c.size);
        offset += c.size;
    }
    return std::move(b).build();
}

Construction build_component_graph(std::size_t n, std::size_t x) {
    PartitionPlan plan = prescribed_plan(n, x);
    Graph g = realize(plan);
    return {std::move(g), std::move(plan)};
}

} // namespace domset
