#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "domset/bigint.hpp"
#include "domset/plan.hpp"

namespace domset {

/// Exact optimal plans for every (n, x) up to the table bounds.
///
/// Dynamic programme over (vertices remaining, domination budget remaining)
/// with complete components (gamma 1, any size) and extremal components
/// (gamma 2, size >= 4). Among plans with the maximal count the one with the
/// fewest components wins, then the lexicographically smallest sorted size
/// list, then complete before extremal at the first differing position.
class AllocationTable {
public:
    AllocationTable(std::size_t max_n, std::size_t max_x);

    std::size_t max_n() const noexcept { return max_n_; }
    std::size_t max_x() const noexcept { return max_x_; }

    /// Best plan over all decompositions, or nullopt when none exists.
    const std::optional<PartitionPlan>& best(std::size_t n, std::size_t x) const;

private:
    std::size_t max_n_;
    std::size_t max_x_;
    std::vector<std::optional<PartitionPlan>> cells_;
};

/// Plan ordering used for tie-breaking; true when `a` is preferred to `b`.
bool preferred(const PartitionPlan& a, const PartitionPlan& b);

/// Components listed by increasing size, complete before extremal on equal size.
void canonicalize(PartitionPlan& plan);

/// Optimal plan for a feasible (n, x); throws Errc::infeasible_order otherwise.
PartitionPlan optimize_allocation(std::size_t n, std::size_t x);

/// A component family for the brute-force decomposition search.
struct ComponentFamily {
    std::size_t gamma = 1;
    std::size_t min_size = 1;
    /// Minimum dominating set count of the family member with the given size.
    std::function<BigInt(std::size_t)> count;
};

/// Complete graphs and gamma-2 extremal graphs, with counts written out directly.
std::vector<ComponentFamily> default_families();

inline constexpr std::size_t kOracleMaxN = 30;
inline constexpr std::size_t kOracleMaxX = 6;

/// Best product count over every multiset of components drawn from `families`
/// with sizes summing to n and gammas summing to x. Bounded by n <= 30, x <= 6.
BigInt exhaustive_decomposition_oracle(std::size_t n, std::size_t x, std::span<const ComponentFamily> families);
BigInt exhaustive_decomposition_oracle(std::size_t n, std::size_t x);

/// C(r + r2, 2) >= r * r2: merging two complete parts into one extremal part does not lose sets.
bool check_pairing_inequality(std::size_t r, std::size_t r2);

/// C(r + a, 2) * C(r - a, 2) <= C(r, 2)^2 for r > a >= 1: equal parts beat unequal ones.
bool check_balance_inequality(std::size_t r, std::size_t a);

/// The two x = 4 candidates: two extremal parts of n/2, or two cliques of n/4 plus one extremal part of n/2.
struct SplitComparison {
    std::size_t n = 0;
    BigInt two_extremal;
    BigInt cliques_and_extremal;
    bool extremal_pair_wins = false;
};

/// Requires n divisible by 4 and n >= 16.
SplitComparison compare_gamma4_splits(std::size_t n);

} // namespace domset
