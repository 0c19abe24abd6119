#include "domset/plan.hpp"

#include <algorithm>
#include <string>

#include "domset/constructions.hpp"
#include "domset/error.hpp"

namespace domset {

std::string_view to_string(ComponentKind kind) { return kind == ComponentKind::complete ? "complete" : "extremal"; }

Component complete_component(std::size_t size) {
    if (size < 1)
        throw Error(Errc::infeasible_order, "complete component needs at least one vertex");
    return Component{ComponentKind::complete, 1, size, BigInt(size)};
}

Component extremal_component(std::size_t size) {
    if (size < 4)
        throw Error(Errc::infeasible_order, "extremal component needs at least four vertices, got " + std::to_string(size));
    return Component{ComponentKind::extremal, 2, size, max_dominating_pairs(size)};
}

PartitionPlan PartitionPlan::from_components(std::vector<Component> components) {
    PartitionPlan plan;
    plan.components = std::move(components);
    for (const auto& c : plan.components) {
        plan.n += c.size;
        plan.x += c.gamma;
    }
    plan.total_count = predicted_count(plan);
    return plan;
}

std::vector<std::size_t> PartitionPlan::sizes() const {
    std::vector<std::size_t> out;
    out.reserve(components.size());
    for (const auto& c : components)
        out.push_back(c.size);
    return out;
}

std::vector<std::size_t> PartitionPlan::sorted_sizes() const {
    auto out = sizes();
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t PartitionPlan::count_of(ComponentKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(components.begin(), components.end(), [kind](const Component& c) { return c.kind == kind; }));
}

void validate(const PartitionPlan& plan) {
    std::size_t n = 0;
    std::size_t x = 0;
    for (const auto& c : plan.components) {
        n += c.size;
        x += c.gamma;
        const Component expected =
            c.kind == ComponentKind::complete ? complete_component(c.size) : extremal_component(c.size);
        if (c != expected)
            throw Error(Errc::domain, "component of size " + std::to_string(c.size) + " has inconsistent gamma or count");
    }
    if (n != plan.n || x != plan.x)
        throw Error(Errc::domain, "plan totals do not match its components");
    if (plan.total_count != predicted_count(plan))
        throw Error(Errc::domain, "plan total_count is not the product of component counts");
}

BigInt predicted_count(const PartitionPlan& plan) {
    BigInt product = 1;
    for (const auto& c : plan.components)
        product *= c.count;
    return product;
}

} // namespace domset
