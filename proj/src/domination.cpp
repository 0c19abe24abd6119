#include "domset/domination.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

#include "domset/error.hpp"

namespace domset {

std::string_view to_string(Mode mode) { return mode == Mode::total ? "total" : "dominating"; }

namespace {

// Multi-word mask for graphs above 64 vertices.
struct WideMask {
    std::vector<Word> w;
};

inline void or_into(Word& dst, Word a, Word b) { dst = a | b; }
inline void or_into(WideMask& dst, const WideMask& a, const WideMask& b) {
    dst.w.resize(a.w.size());
    for (std::size_t i = 0; i < a.w.size(); ++i)
        dst.w[i] = a.w[i] | b.w[i];
}

inline bool covers(Word a, Word b, Word full) { return (a | b) == full; }
inline bool covers(const WideMask& a, const WideMask& b, const WideMask& full) {
    for (std::size_t i = 0; i < a.w.size(); ++i)
        if ((a.w[i] | b.w[i]) != full.w[i])
            return false;
    return true;
}

inline std::size_t popcnt(Word a) { return static_cast<std::size_t>(std::popcount(a)); }
inline std::size_t popcnt(const WideMask& a) {
    std::size_t c = 0;
    for (Word x : a.w)
        c += popcnt(x);
    return c;
}

template <class Mask>
Mask neighborhood_mask(const Graph& g, Vertex v, Mode mode);

template <>
Word neighborhood_mask<Word>(const Graph& g, Vertex v, Mode mode) {
    return mode == Mode::total ? g.open_mask(v) : g.closed_mask(v);
}

template <>
WideMask neighborhood_mask<WideMask>(const Graph& g, Vertex v, Mode mode) {
    WideMask m;
    const auto r = g.row(v);
    m.w.assign(r.begin(), r.end());
    if (mode == Mode::dominating)
        m.w[v / kWordBits] |= Word{1} << (v % kWordBits);
    return m;
}

template <class Mask>
Mask empty_mask(std::size_t n);
template <>
Word empty_mask<Word>(std::size_t) { return 0; }
template <>
WideMask empty_mask<WideMask>(std::size_t n) { return WideMask{std::vector<Word>(words_for(n), 0)}; }

template <class Mask>
Mask full_mask(std::size_t n) {
    const VertexSet all = VertexSet::full(n);
    const auto words = all.words();
    if constexpr (std::is_same_v<Mask, Word>)
        return words.empty() ? Word{0} : words[0];
    else
        return WideMask{std::vector<Word>(words.begin(), words.end())};
}

// Lexicographic k-subset enumeration over neighbourhood masks. A prefix is
// abandoned once the union of all remaining neighbourhoods cannot complete the
// cover, or once the uncovered count exceeds `remaining` times the largest
// remaining neighbourhood.
template <class Mask>
class SubsetSearch {
public:
    SubsetSearch(const Graph& g, Mode mode, std::size_t k)
        : n_(g.order()), k_(k), full_(full_mask<Mask>(g.order())) {
        nbhd_.reserve(n_);
        for (Vertex v = 0; v < n_; ++v)
            nbhd_.push_back(neighborhood_mask<Mask>(g, v, mode));
        suffix_union_.assign(n_ + 1, empty_mask<Mask>(n_));
        suffix_max_.assign(n_ + 1, 0);
        for (std::size_t i = n_; i-- > 0;) {
            or_into(suffix_union_[i], suffix_union_[i + 1], nbhd_[i]);
            suffix_max_[i] = std::max(suffix_max_[i + 1], popcnt(nbhd_[i]));
        }
        cover_.assign(k_ + 1, empty_mask<Mask>(n_));
        chosen_.assign(k_, 0);
    }

    /// Number of admissible smallest vertices.
    std::size_t first_choices() const { return k_ == 0 || k_ > n_ ? 0 : n_ - k_ + 1; }

    /// Visits the passing k-sets whose smallest vertex is `first`; false when the visitor stopped.
    template <class Visitor>
    bool run_first(Vertex first, Visitor& visitor) {
        if (!viable(cover_[0], first, k_))
            return true;
        chosen_[0] = first;
        if (k_ == 1) {
            if (!covers(cover_[0], nbhd_[first], full_))
                return true;
            return emit(visitor);
        }
        or_into(cover_[1], cover_[0], nbhd_[first]);
        return descend(1, first + 1, visitor);
    }

private:
    bool viable(const Mask& cov, Vertex from, std::size_t remaining) const {
        if (!covers(cov, suffix_union_[from], full_))
            return false;
        return n_ - popcnt(cov) <= remaining * suffix_max_[from];
    }

    template <class Visitor>
    bool emit(Visitor& visitor) {
        if (visitor.wants_sets())
            return visitor.visit(std::span<const Vertex>(chosen_));
        visitor.add(1);
        return true;
    }

    template <class Visitor>
    bool descend(std::size_t depth, Vertex start, Visitor& visitor) {
        const std::size_t remaining = k_ - depth;
        const Mask& cov = cover_[depth];
        const Vertex stop = n_ - remaining;
        if (remaining == 1) {
            std::uint64_t hits = 0;
            for (Vertex v = start; v <= stop; ++v) {
                if (!covers(cov, suffix_union_[v], full_))
                    break;
                if (!covers(cov, nbhd_[v], full_))
                    continue;
                if (visitor.wants_sets()) {
                    chosen_[depth] = v;
                    if (!visitor.visit(std::span<const Vertex>(chosen_)))
                        return false;
                } else {
                    ++hits;
                }
            }
            visitor.add(hits);
            return true;
        }
        for (Vertex v = start; v <= stop; ++v) {
            // Both bounds are monotone in v, so failure ends the loop.
            if (!viable(cov, v, remaining))
                break;
            chosen_[depth] = v;
            or_into(cover_[depth + 1], cov, nbhd_[v]);
            if (!descend(depth + 1, v + 1, visitor))
                return false;
        }
        return true;
    }

    std::size_t n_;
    std::size_t k_;
    Mask full_;
    std::vector<Mask> nbhd_;
    std::vector<Mask> suffix_union_;
    std::vector<std::size_t> suffix_max_;
    std::vector<Mask> cover_;
    std::vector<Vertex> chosen_;
};

struct ExistsVisitor {
    bool found = false;
    bool wants_sets() const { return true; }
    bool visit(std::span<const Vertex>) {
        found = true;
        return false;
    }
    void add(std::uint64_t c) { found = found || c > 0; }
};

struct CountVisitor {
    std::size_t n;
    std::size_t cap;
    std::uint64_t count = 0;
    std::vector<VertexSet> witnesses;

    bool wants_sets() const { return witnesses.size() < cap; }
    bool visit(std::span<const Vertex> chosen) {
        ++count;
        VertexSet s(n);
        for (Vertex v : chosen)
            s.insert(v);
        witnesses.push_back(std::move(s));
        return true;
    }
    void add(std::uint64_t c) { count += c; }
};

template <class Mask>
bool exists_set(const Graph& g, std::size_t k, Mode mode) {
    SubsetSearch<Mask> search(g, mode, k);
    ExistsVisitor visitor;
    for (Vertex first = 0; first < search.first_choices() && !visitor.found; ++first)
        search.run_first(first, visitor);
    return visitor.found;
}

bool exists_set(const Graph& g, std::size_t k, Mode mode) {
    return g.order() <= kWordBits ? exists_set<Word>(g, k, mode) : exists_set<WideMask>(g, k, mode);
}

unsigned resolve_threads(unsigned requested) {
    if (requested == 0)
        requested = std::max(1u, std::thread::hardware_concurrency());
    return requested;
}

void check_counting_limits(const Graph& g, std::size_t k, const CountOptions& options) {
    if (g.order() > kMaxCountingOrder)
        throw Error(Errc::size_limit, "counting requires at most " + std::to_string(kMaxCountingOrder) +
                                          " vertices, got " + std::to_string(g.order()));
    if (k > kDefaultMaxCountedK && !options.allow_large_k)
        throw Error(Errc::size_limit, "counting sets of size " + std::to_string(k) + " requires allow_large_k (limit " +
                                          std::to_string(kDefaultMaxCountedK) + ")");
}

// Each chunk is one choice of smallest vertex; chunks are merged in index
// order so the result is independent of the thread count.
CountVisitor count_chunked(const Graph& g, std::size_t k, Mode mode, unsigned threads, std::size_t cap) {
    CountVisitor total{g.order(), cap, 0, {}};
    if (k == 0 || k > g.order()) {
        if (k == 0 && g.order() == 0) {
            total.count = 1;
            if (cap > 0)
                total.witnesses.emplace_back(0);
        }
        return total;
    }
    const SubsetSearch<Word> prototype(g, mode, k);
    const std::size_t chunks = prototype.first_choices();
    std::vector<CountVisitor> results(chunks, CountVisitor{g.order(), cap, 0, {}});
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        SubsetSearch<Word> search = prototype;
        for (std::size_t c; (c = next.fetch_add(1)) < chunks;)
            search.run_first(c, results[c]);
    };
    threads = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), chunks));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    for (auto& r : results) {
        total.count += r.count;
        for (auto& w : r.witnesses) {
            if (total.witnesses.size() >= cap)
                break;
            total.witnesses.push_back(std::move(w));
        }
    }
    return total;
}

} // namespace

bool is_dominating(const Graph& g, const VertexSet& s) {
    VertexSet covered(g.order());
    for (Vertex v : s.members()) {
        if (v >= g.order())
            throw Error(Errc::out_of_range, "set contains a vertex outside the graph");
        covered |= g.closed_neighborhood(v);
    }
    return covered.size() == g.order();
}

bool is_total_dominating(const Graph& g, const VertexSet& s) {
    VertexSet covered(g.order());
    for (Vertex v : s.members()) {
        if (v >= g.order())
            throw Error(Errc::out_of_range, "set contains a vertex outside the graph");
        covered |= g.open_neighborhood(v);
    }
    return covered.size() == g.order();
}

bool satisfies(const Graph& g, const VertexSet& s, Mode mode) {
    return mode == Mode::total ? is_total_dominating(g, s) : is_dominating(g, s);
}

std::size_t domination_number(const Graph& g) {
    if (g.order() == 0)
        throw Error(Errc::domain, "domination number of the empty graph is undefined");
    for (std::size_t k = 1; k < g.order(); ++k)
        if (exists_set(g, k, Mode::dominating))
            return k;
    return g.order();
}

std::size_t total_domination_number(const Graph& g) {
    if (g.order() == 0 || g.has_isolated_vertex())
        throw Error(Errc::undefined_total_domination, "total domination number is undefined: isolated vertex present");
    for (std::size_t k = 2; k < g.order(); ++k)
        if (exists_set(g, k, Mode::total))
            return k;
    return g.order();
}

std::size_t minimum_size(const Graph& g, Mode mode) {
    return mode == Mode::total ? total_domination_number(g) : domination_number(g);
}

std::uint64_t count_sets(const Graph& g, std::size_t k, Mode mode, const CountOptions& options) {
    check_counting_limits(g, k, options);
    return count_chunked(g, k, mode, options.threads, 0).count;
}

DominationReport count_sets_report(const Graph& g, std::size_t k, Mode mode, const CountOptions& options) {
    check_counting_limits(g, k, options);
    auto counted = count_chunked(g, k, mode, options.threads, options.witness_cap);
    return DominationReport{mode, k, counted.count, std::move(counted.witnesses)};
}

DominationReport count_minimum(const Graph& g, Mode mode, const CountOptions& options) {
    if (g.order() > kMaxCountingOrder)
        check_counting_limits(g, 0, options);
    DominationReport report;
    report.mode = mode;
    report.gamma = minimum_size(g, mode);
    check_counting_limits(g, report.gamma, options);
    auto counted = count_chunked(g, report.gamma, mode, options.threads, options.witness_cap);
    report.count = counted.count;
    report.witnesses = std::move(counted.witnesses);
    return report;
}

std::uint64_t count_sets_naive(const Graph& g, std::size_t k, Mode mode) {
    const std::size_t n = g.order();
    check_counting_limits(g, k, CountOptions{});
    if (k > n)
        return 0;

    std::vector<std::vector<Vertex>> adj(n);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u = 0; u < n; ++u)
            if (u != v && g.adjacent(u, v))
                adj[v].push_back(u);

    std::vector<Vertex> pick(k);
    for (std::size_t i = 0; i < k; ++i)
        pick[i] = i;
    std::uint64_t count = 0;
    std::vector<char> hit(n);
    while (true) {
        std::fill(hit.begin(), hit.end(), 0);
        for (Vertex u : pick) {
            if (mode == Mode::dominating)
                hit[u] = 1;
            for (Vertex w : adj[u])
                hit[w] = 1;
        }
        if (std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; }))
            ++count;
        // Advance to the next combination.
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + (i - 1))
            --i;
        if (i == 0)
            break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j)
            pick[j] = pick[j - 1] + 1;
    }
    return count;
}

} // namespace domset
