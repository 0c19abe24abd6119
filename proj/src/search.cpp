#include "domset/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "domset/constructions.hpp"
#include "domset/error.hpp"
#include "domset/graph6.hpp"

namespace domset {

std::uint64_t labeled_graph_count(std::size_t n) {
    if (n > kMaxLabeledOrder)
        throw Error(Errc::size_limit, "labeled enumeration supports n <= " + std::to_string(kMaxLabeledOrder) +
                                          "; use a graph6 corpus for larger orders");
    return std::uint64_t{1} << (n * (n - (n > 0 ? 1 : 0)) / 2);
}

Graph graph_from_edge_mask(std::size_t n, std::uint64_t mask) {
    GraphBuilder b(n);
    std::size_t t = 0;
    for (Vertex col = 1; col < n; ++col)
        for (Vertex row = 0; row < col; ++row, ++t)
            if ((mask >> t) & 1u)
                b.add_edge(row, col);
    return std::move(b).build();
}

LabeledGraphs::LabeledGraphs(std::size_t n, std::uint64_t begin, std::uint64_t end)
    : n_(n), cursor_(begin), end_(std::min(end, labeled_graph_count(n))) {}

std::optional<Graph> LabeledGraphs::next() {
    if (cursor_ >= end_)
        return std::nullopt;
    return graph_from_edge_mask(n_, cursor_++);
}

LabeledGraphs enumerate_labeled_graphs(std::size_t n) { return LabeledGraphs(n, 0, labeled_graph_count(n)); }

void ExtremalRecord::observe(const Graph& g) {
    ++graphs_scanned;
    if (g.order() == 0)
        return;
    const std::size_t gamma = domination_number(g);
    if (gamma >= target_gamma && (!max_edges_gamma_at_least_target || g.size() > *max_edges_gamma_at_least_target))
        max_edges_gamma_at_least_target = g.size();

    // Total mode keeps graphs whose domination and total domination numbers
    // both equal the target; K_n has total domination number 2 but a dominating vertex.
    if (gamma != target_gamma)
        return;
    if (mode == Mode::total && (g.has_isolated_vertex() || total_domination_number(g) != target_gamma))
        return;
    ++qualifying;
    const std::uint64_t count = count_sets(g, target_gamma, mode, CountOptions{.allow_large_k = true});
    if (witness && count < max_count)
        return;
    std::string encoded = write_graph6(g);
    if (!witness || count > max_count || encoded < witness_graph6) {
        max_count = count;
        witness = g;
        witness_graph6 = std::move(encoded);
    }
}

void ExtremalRecord::merge(const ExtremalRecord& other) {
    graphs_scanned += other.graphs_scanned;
    qualifying += other.qualifying;
    if (other.max_edges_gamma_at_least_target &&
        (!max_edges_gamma_at_least_target || *other.max_edges_gamma_at_least_target > *max_edges_gamma_at_least_target))
        max_edges_gamma_at_least_target = other.max_edges_gamma_at_least_target;
    if (!other.witness)
        return;
    if (!witness || other.max_count > max_count ||
        (other.max_count == max_count && other.witness_graph6 < witness_graph6)) {
        max_count = other.max_count;
        witness = other.witness;
        witness_graph6 = other.witness_graph6;
    }
}

ExtremalRecord extremal_scan(GraphSource& source, Mode mode, std::size_t target_gamma) {
    ExtremalRecord record;
    record.mode = mode;
    record.target_gamma = target_gamma;
    bool first = true;
    while (auto g = source.next()) {
        if (first) {
            record.n = g->order();
            first = false;
        } else if (g->order() != record.n) {
            throw Error(Errc::input, "graph stream mixes orders " + std::to_string(record.n) + " and " +
                                         std::to_string(g->order()));
        }
        record.observe(*g);
    }
    return record;
}

ExtremalRecord scan_labeled(std::size_t n, Mode mode, std::size_t target_gamma, const ScanOptions& options) {
    const std::uint64_t total = labeled_graph_count(n);
    const std::uint64_t chunk = std::max<std::uint64_t>(1, options.chunk_size);
    const std::uint64_t chunks = (total + chunk - 1) / chunk;

    ExtremalRecord blank;
    blank.n = n;
    blank.mode = mode;
    blank.target_gamma = target_gamma;
    std::vector<ExtremalRecord> parts(chunks, blank);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;) {
            const std::uint64_t end = std::min(total, (c + 1) * chunk);
            for (std::uint64_t mask = c * chunk; mask < end; ++mask)
                parts[c].observe(graph_from_edge_mask(n, mask));
        }
    };
    unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    ExtremalRecord record = blank;
    for (const auto& p : parts)
        record.merge(p);
    return record;
}

EfficiencyReport efficiency_ratio(std::size_t n, std::size_t x) {
    const PartitionPlan plan = prescribed_plan(n, x);
    EfficiencyReport r;
    r.n = n;
    r.x = x;
    r.predicted = plan.total_count;
    r.subsets = binomial(n, x);
    r.ratio = Rational(r.predicted, r.subsets);

    const double dx = static_cast<double>(x);
    const double coefficient = x % 2 == 0 ? std::pow(std::sqrt(2.0) / dx, dx)
                                          : std::pow(2.0, (dx - 1.0) / 2.0) / std::pow(dx, dx);
    r.reference_count = coefficient * std::pow(static_cast<double>(n), dx);
    r.reference_fraction = coefficient * std::tgamma(dx + 1.0);
    return r;
}

} // namespace domset
