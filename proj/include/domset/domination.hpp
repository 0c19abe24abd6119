#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "domset/graph.hpp"

namespace domset {

enum class Mode { dominating, total };

std::string_view to_string(Mode mode);

/// Largest order accepted by the counting operations.
inline constexpr std::size_t kMaxCountingOrder = 64;
/// Largest set size counted without `allow_large_k`.
inline constexpr std::size_t kDefaultMaxCountedK = 7;
inline constexpr std::size_t kDefaultWitnessCap = 1000;

struct CountOptions {
    /// Worker threads; 0 picks the hardware concurrency. Results never depend on it.
    unsigned threads = 1;
    /// Permit k > kDefaultMaxCountedK.
    bool allow_large_k = false;
    /// Maximum number of witness sets retained by count_minimum.
    std::size_t witness_cap = kDefaultWitnessCap;
};

struct DominationReport {
    Mode mode = Mode::dominating;
    std::size_t gamma = 0;
    std::uint64_t count = 0;
    /// Lexicographically first minimum sets, at most `witness_cap` of them.
    std::vector<VertexSet> witnesses;
};

bool is_dominating(const Graph& g, const VertexSet& s);
bool is_total_dominating(const Graph& g, const VertexSet& s);
bool satisfies(const Graph& g, const VertexSet& s, Mode mode);

/// Smallest k such that some k-set dominates; n must be at least 1.
std::size_t domination_number(const Graph& g);
/// Throws Errc::undefined_total_domination when g has an isolated vertex.
std::size_t total_domination_number(const Graph& g);
std::size_t minimum_size(const Graph& g, Mode mode);

/// Exact number of k-subsets passing the mode's predicate. Requires n <= 64.
std::uint64_t count_sets(const Graph& g, std::size_t k, Mode mode, const CountOptions& options = {});

/// Counts k-sets like count_sets and keeps up to `witness_cap` of them; `gamma` holds k.
DominationReport count_sets_report(const Graph& g, std::size_t k, Mode mode, const CountOptions& options = {});

/// Minimum size together with the number of minimum sets and up to `witness_cap` witnesses.
DominationReport count_minimum(const Graph& g, Mode mode, const CountOptions& options = {});

/// Reference counter: adjacency lists, plain combination stepping, no masks and no pruning.
std::uint64_t count_sets_naive(const Graph& g, std::size_t k, Mode mode);

} // namespace domset
