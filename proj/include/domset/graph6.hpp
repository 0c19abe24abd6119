#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domset/graph.hpp"
#include "domset/source.hpp"

namespace domset {

struct Graph6Options {
    /// Accept nonzero padding bits and non-minimal size fields, reporting them as warnings.
    bool lenient = false;
};

/// Parses one graph6 record (optionally prefixed by ">>graph6<<", trailing newline ignored).
/// Errors are ParseError with the byte offset into `record`.
Graph parse_graph6(std::string_view record, const Graph6Options& options = {},
                   std::vector<std::string>* warnings = nullptr);

/// Canonical graph6 record without header or newline.
std::string write_graph6(const Graph& g);

/// Parses "n" followed by "u v" lines; '#' starts a comment. Errors carry the 1-based line.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// Streams one graph per nonempty line of a graph6 file.
class Graph6Reader : public GraphSource {
public:
    explicit Graph6Reader(std::istream& in, Graph6Options options = {}) : in_(in), options_(options) {}

    std::optional<Graph> next() override;
    std::size_t line() const noexcept { return line_; }
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

private:
    std::istream& in_;
    Graph6Options options_;
    std::size_t line_ = 0;
    std::vector<std::string> warnings_;
};

} // namespace domset
