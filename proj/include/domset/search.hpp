#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "domset/bigint.hpp"
#include "domset/domination.hpp"
#include "domset/graph.hpp"
#include "domset/source.hpp"

namespace domset {

inline constexpr std::size_t kMaxLabeledOrder = 7;

/// 2^C(n,2).
std::uint64_t labeled_graph_count(std::size_t n);

/// Graph whose edge set is `mask` read in graph6 bit order: bit t is the t-th
/// pair of (0,1), (0,2), (1,2), (0,3), ...
Graph graph_from_edge_mask(std::size_t n, std::uint64_t mask);

/// Every labeled simple graph on n vertices, in edge-mask counter order over [begin, end).
class LabeledGraphs : public GraphSource {
public:
    LabeledGraphs(std::size_t n, std::uint64_t begin, std::uint64_t end);

    std::optional<Graph> next() override;

private:
    std::size_t n_;
    std::uint64_t cursor_;
    std::uint64_t end_;
};

/// Full enumeration on n <= 7 vertices; larger n throws Errc::size_limit.
LabeledGraphs enumerate_labeled_graphs(std::size_t n);

struct ExtremalRecord {
    std::size_t n = 0;
    Mode mode = Mode::dominating;
    std::size_t target_gamma = 2;
    /// Largest count of (total) dominating target-sets among graphs whose domination number (and,
    /// in total mode, total domination number) equals the target.
    std::uint64_t max_count = 0;
    /// Graph achieving max_count; ties go to the smallest graph6 string.
    std::optional<Graph> witness;
    std::string witness_graph6;
    std::uint64_t graphs_scanned = 0;
    /// Graphs passing the minimum-size filter.
    std::uint64_t qualifying = 0;
    /// Largest edge count among graphs with domination number >= target_gamma.
    std::optional<std::size_t> max_edges_gamma_at_least_target;

    /// Folds another record for the same (n, mode, target) into this one; associative and commutative.
    void merge(const ExtremalRecord& other);
    /// Accounts for one graph.
    void observe(const Graph& g);
};

/// Sequential scan of a stream of equal-order graphs. Mixed orders throw Errc::input.
ExtremalRecord extremal_scan(GraphSource& source, Mode mode, std::size_t target_gamma = 2);

struct ScanOptions {
    unsigned threads = 1;
    /// Edge masks per work unit.
    std::uint64_t chunk_size = std::uint64_t{1} << 14;
};

/// Scan of all labeled graphs on n <= 7 vertices, split into edge-mask ranges.
ExtremalRecord scan_labeled(std::size_t n, Mode mode, std::size_t target_gamma = 2, const ScanOptions& options = {});

struct EfficiencyReport {
    std::size_t n = 0;
    std::size_t x = 0;
    BigInt predicted;
    BigInt subsets;
    /// predicted / C(n, x), exact.
    Rational ratio;
    /// Leading-order count c_x * n^x of the construction.
    double reference_count = 0.0;
    /// c_x * x!, the large-n limit of the ratio implied by reference_count.
    double reference_fraction = 0.0;
};

/// Fraction of x-subsets that dominate the prescribed component graph.
EfficiencyReport efficiency_ratio(std::size_t n, std::size_t x);

} // namespace domset
