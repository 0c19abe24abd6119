#pragma once

#include <cstddef>

#include "domset/bigint.hpp"
#include "domset/graph.hpp"
#include "domset/plan.hpp"

namespace domset {

/// K_{2,...,2} on n vertices (n even, n >= 4); parts are {2i, 2i+1}.
Graph cocktail_party(std::size_t n);

/// Extremal graph with domination number 2 on r >= 4 vertices. Even r gives the
/// cocktail party graph; odd r gives parts {0,1,2}, {3,4}, ..., {r-2,r-1} with the
/// extra edge {0,1} inside the three-vertex part.
Graph extremal_gamma2(std::size_t r);

/// Maximum number of dominating 2-sets among n-vertex graphs with domination number 2.
BigInt max_dominating_pairs(std::size_t n);
/// Maximum number of total dominating 2-sets among n-vertex graphs with total domination number 2.
BigInt max_total_dominating_pairs(std::size_t n);
/// Maximum edge count of an n-vertex graph whose domination number is at least 2.
BigInt max_edges_gamma2(std::size_t n);

/// Throws Errc::infeasible_order unless a component graph of order n and domination number x exists.
void require_feasible(std::size_t n, std::size_t x);
bool is_feasible(std::size_t n, std::size_t x) noexcept;

/// Component sizes prescribed by the even-split rule: (x - x mod 2)/2 extremal
/// components of about 2n/x vertices and, for odd x, one complete component of about n/x.
PartitionPlan prescribed_plan(std::size_t n, std::size_t x);

/// Disjoint union of the plan's components in plan order.
Graph realize(const PartitionPlan& plan);

struct Construction {
    Graph graph;
    PartitionPlan plan;
};

/// Graph of order n with domination number x built from prescribed_plan(n, x).
Construction build_component_graph(std::size_t n, std::size_t x);

} // namespace domset
