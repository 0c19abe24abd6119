#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "domset/bigint.hpp"

namespace domset {

/// Component families used by the disjoint-union constructions.
enum class ComponentKind {
    complete,  ///< K_r: domination number 1, r minimum dominating sets.
    extremal,  ///< The gamma = 2 extremal graph of order r >= 4.
};

std::string_view to_string(ComponentKind kind);

struct Component {
    ComponentKind kind = ComponentKind::complete;
    std::size_t gamma = 1;
    std::size_t size = 1;
    /// Number of minimum dominating sets of this component.
    BigInt count = 1;

    friend bool operator==(const Component&, const Component&) = default;
};

Component complete_component(std::size_t size);
Component extremal_component(std::size_t size);

/// A decomposition of n vertices into components whose domination numbers sum to x.
struct PartitionPlan {
    std::size_t n = 0;
    std::size_t x = 0;
    std::vector<Component> components;
    BigInt total_count = 1;

    /// Fills n, x and total_count from the component list.
    static PartitionPlan from_components(std::vector<Component> components);

    std::vector<std::size_t> sizes() const;
    /// Sizes in nondecreasing order.
    std::vector<std::size_t> sorted_sizes() const;
    std::size_t count_of(ComponentKind kind) const;

    friend bool operator==(const PartitionPlan&, const PartitionPlan&) = default;
};

/// Throws Errc::domain if any documented plan invariant is broken.
void validate(const PartitionPlan& plan);

/// Product of the per-component counts.
BigInt predicted_count(const PartitionPlan& plan);

} // namespace domset
