#pragma once

#include <stdexcept>
#include <string>

namespace domset {

enum class Errc {
    invalid_edge,
    out_of_range,
    infeasible_order,
    size_limit,
    undefined_total_domination,
    domain,
    parse,
    input,
};

/// Base exception for every library failure; `code()` selects the CLI exit status.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Parse failure carrying the byte offset (graph6) or 1-based line (edge list).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(Errc::parse, what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace domset
