#pragma once

#include <optional>

#include "domset/graph.hpp"

namespace domset {

/// Pull-based stream of graphs.
class GraphSource {
public:
    virtual ~GraphSource() = default;
    virtual std::optional<Graph> next() = 0;
};

} // namespace domset
