#include "domset/partition.hpp"

#include <algorithm>
#include <string>

#include "domset/constructions.hpp"
#include "domset/error.hpp"

namespace domset {

namespace {

auto component_key(const Component& c) { return std::pair(c.size, c.kind == ComponentKind::complete ? 0 : 1); }

} // namespace

void canonicalize(PartitionPlan& plan) {
    std::sort(plan.components.begin(), plan.components.end(),
              [](const Component& a, const Component& b) { return component_key(a) < component_key(b); });
}

bool preferred(const PartitionPlan& a, const PartitionPlan& b) {
    if (a.total_count != b.total_count)
        return a.total_count > b.total_count;
    if (a.components.size() != b.components.size())
        return a.components.size() < b.components.size();
    const auto sa = a.sorted_sizes();
    const auto sb = b.sorted_sizes();
    if (sa != sb)
        return sa < sb;
    std::vector<std::pair<std::size_t, int>> ka;
    std::vector<std::pair<std::size_t, int>> kb;
    for (const auto& c : a.components)
        ka.push_back(component_key(c));
    for (const auto& c : b.components)
        kb.push_back(component_key(c));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka < kb;
}

AllocationTable::AllocationTable(std::size_t max_n, std::size_t max_x)
    : max_n_(max_n), max_x_(max_x), cells_((max_n + 1) * (max_x + 1)) {
    auto cell = [this](std::size_t n, std::size_t x) -> std::optional<PartitionPlan>& {
        return cells_[n * (max_x_ + 1) + x];
    };
    cell(0, 0) = PartitionPlan{};

    std::vector<Component> extremal(max_n + 1);
    for (std::size_t s = 4; s <= max_n; ++s)
        extremal[s] = extremal_component(s);

    for (std::size_t n = 1; n <= max_n; ++n) {
        for (std::size_t x = 1; x <= max_x; ++x) {
            std::optional<PartitionPlan> winner;
            auto consider = [&](const Component& c, const std::optional<PartitionPlan>& rest) {
                if (!rest)
                    return;
                const BigInt count = rest->total_count * c.count;
                if (winner && count < winner->total_count)
                    return;
                PartitionPlan candidate = *rest;
                candidate.components.push_back(c);
                candidate.n += c.size;
                candidate.x += c.gamma;
                candidate.total_count = count;
                if (!winner || preferred(candidate, *winner))
                    winner = std::move(candidate);
            };
            for (std::size_t s = 1; s <= n; ++s)
                consider(complete_component(s), cell(n - s, x - 1));
            if (x >= 2)
                for (std::size_t s = 4; s <= n; ++s)
                    consider(extremal[s], cell(n - s, x - 2));
            if (winner)
                canonicalize(*winner);
            cell(n, x) = std::move(winner);
        }
    }
}

const std::optional<PartitionPlan>& AllocationTable::best(std::size_t n, std::size_t x) const {
    if (n > max_n_ || x > max_x_)
        throw Error(Errc::size_limit, "allocation table query (" + std::to_string(n) + "," + std::to_string(x) +
                                          ") outside its bounds");
    return cells_[n * (max_x_ + 1) + x];
}

PartitionPlan optimize_allocation(std::size_t n, std::size_t x) {
    require_feasible(n, x);
    return *AllocationTable(n, x).best(n, x);
}

std::vector<ComponentFamily> default_families() {
    return {
        ComponentFamily{1, 1, [](std::size_t r) { return BigInt(r); }},
        ComponentFamily{2, 4,
                        [](std::size_t r) {
                            const std::size_t pairs = r * (r - 1) / 2;
                            return BigInt(r % 2 == 0 ? pairs : pairs - 1);
                        }},
    };
}

namespace {

// Components are generated in nonincreasing (family, size) order so every
// multiset is visited once.
void enumerate_multisets(std::size_t n, std::size_t x, std::span<const ComponentFamily> families,
                         std::size_t family_cap, std::size_t size_cap, const BigInt& product, BigInt& best,
                         bool& found) {
    if (n == 0 && x == 0) {
        if (!found || product > best)
            best = product;
        found = true;
        return;
    }
    if (n == 0 || x == 0)
        return;
    for (std::size_t f = 0; f <= family_cap; ++f) {
        const auto& fam = families[f];
        if (fam.gamma > x)
            continue;
        const std::size_t top = f == family_cap ? std::min(size_cap, n) : n;
        for (std::size_t s = fam.min_size; s <= top; ++s)
            enumerate_multisets(n - s, x - fam.gamma, families, f, s, product * fam.count(s), best, found);
    }
}

} // namespace

BigInt exhaustive_decomposition_oracle(std::size_t n, std::size_t x, std::span<const ComponentFamily> families) {
    if (n > kOracleMaxN || x > kOracleMaxX)
        throw Error(Errc::size_limit, "decomposition oracle is limited to n <= " + std::to_string(kOracleMaxN) +
                                          ", x <= " + std::to_string(kOracleMaxX));
    BigInt best = 0;
    bool found = false;
    if (!families.empty())
        enumerate_multisets(n, x, families, families.size() - 1, n, BigInt(1), best, found);
    if (!found)
        throw Error(Errc::infeasible_order, "no decomposition of " + std::to_string(n) + " vertices with gamma " +
                                                std::to_string(x));
    return best;
}

BigInt exhaustive_decomposition_oracle(std::size_t n, std::size_t x) {
    const auto families = default_families();
    return exhaustive_decomposition_oracle(n, x, families);
}

bool check_pairing_inequality(std::size_t r, std::size_t r2) {
    if (r < 1 || r2 < 1)
        throw Error(Errc::domain, "pairing inequality needs r, r' >= 1");
    return binomial(r + r2, 2) >= BigInt(r) * r2;
}

bool check_balance_inequality(std::size_t r, std::size_t a) {
    if (a < 1 || a >= r)
        throw Error(Errc::domain, "balance inequality needs r > a >= 1, got r=" + std::to_string(r) +
                                      " a=" + std::to_string(a));
    const BigInt equal = binomial(r, 2);
    return binomial(r + a, 2) * binomial(r - a, 2) <= equal * equal;
}

SplitComparison compare_gamma4_splits(std::size_t n) {
    if (n < 16 || n % 4 != 0)
        throw Error(Errc::infeasible_order, "split comparison needs n divisible by 4 and n >= 16, got " +
                                                std::to_string(n));
    SplitComparison out;
    out.n = n;
    const BigInt half = max_dominating_pairs(n / 2);
    out.two_extremal = half * half;
    out.cliques_and_extremal = BigInt(n / 4) * (n / 4) * half;
    out.extremal_pair_wins = out.two_extremal > out.cliques_and_extremal;
    return out;
}

} // namespace domset
