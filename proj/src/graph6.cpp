#include "domset/graph6.hpp"

#include <charconv>
#include <sstream>
#include <string>

#include "domset/error.hpp"

namespace domset {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr unsigned char kBias = 63;
constexpr unsigned char kMaxByte = 126;

std::string describe(unsigned char byte) {
    if (byte >= 32 && byte < 127)
        return std::string("'") + static_cast<char>(byte) + "'";
    return "0x" + [byte] {
        std::ostringstream s;
        s << std::hex << static_cast<int>(byte);
        return s.str();
    }();
}

class ByteCursor {
public:
    ByteCursor(std::string_view data, std::size_t base) : data_(data), base_(base) {}

    bool done() const { return pos_ >= data_.size(); }
    std::size_t offset() const { return base_ + pos_; }
    unsigned char peek() const { return static_cast<unsigned char>(data_[pos_]); }

    unsigned value6(const char* what) {
        if (done())
            throw ParseError("truncated graph6 record: missing " + std::string(what) + " at byte " +
                                 std::to_string(offset()),
                             offset());
        const unsigned char b = peek();
        if (b < kBias || b > kMaxByte)
            throw ParseError("byte " + describe(b) + " at offset " + std::to_string(offset()) +
                                 " outside the graph6 range [63,126]",
                             offset());
        ++pos_;
        return b - kBias;
    }

private:
    std::string_view data_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

void append_size(std::string& out, std::size_t n) {
    auto groups = [&](int count) {
        for (int shift = 6 * (count - 1); shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(kBias + ((n >> shift) & 0x3f)));
    };
    if (n <= 62) {
        out.push_back(static_cast<char>(kBias + n));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(kMaxByte));
        groups(3);
    } else {
        out.push_back(static_cast<char>(kMaxByte));
        out.push_back(static_cast<char>(kMaxByte));
        groups(6);
    }
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

} // namespace

Graph parse_graph6(std::string_view record, const Graph6Options& options, std::vector<std::string>* warnings) {
    while (!record.empty() && (record.back() == '\n' || record.back() == '\r'))
        record.remove_suffix(1);
    std::size_t base = 0;
    if (record.starts_with(kHeader))
        base = kHeader.size();
    ByteCursor cur(record.substr(base), base);
    auto warn = [&](const std::string& message, std::size_t offset) {
        if (!options.lenient)
            throw ParseError(message, offset);
        if (warnings)
            warnings->push_back(message);
    };

    std::size_t n = cur.value6("size field");
    if (n == 63) {
        const bool wide = !cur.done() && cur.peek() == kMaxByte;
        if (wide)
            cur.value6("size field");
        n = 0;
        for (int i = 0; i < (wide ? 6 : 3); ++i)
            n = (n << 6) | cur.value6("size field");
        if (n <= 62 || (wide && n <= 258047))
            warn("non-minimal graph6 size field for n=" + std::to_string(n), base);
    }
    if (n > kMaxVertices)
        throw Error(Errc::size_limit,
                    "graph6 record has " + std::to_string(n) + " vertices; cap is " + std::to_string(kMaxVertices));

    GraphBuilder b(n);
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    std::size_t t = 0;
    Vertex row = 0;
    Vertex col = 1;
    while (t < bits) {
        const unsigned chunk = cur.value6("adjacency data");
        for (int k = 5; k >= 0; --k, ++t) {
            const bool bit = ((chunk >> k) & 1u) != 0;
            if (t >= bits) {
                if (bit)
                    warn("nonzero padding bit in graph6 record at offset " + std::to_string(cur.offset() - 1),
                         cur.offset() - 1);
                continue;
            }
            if (bit)
                b.add_edge(row, col);
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
    }
    if (!cur.done())
        throw ParseError("trailing bytes after graph6 record at offset " + std::to_string(cur.offset()), cur.offset());
    return std::move(b).build();
}

std::string write_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    append_size(out, n);
    unsigned chunk = 0;
    int filled = 0;
    for (Vertex col = 1; col < n; ++col) {
        for (Vertex row = 0; row < col; ++row) {
            chunk = (chunk << 1) | (g.adjacent(row, col) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(kBias + chunk));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>(kBias + (chunk << (6 - filled))));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::optional<GraphBuilder> builder;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& message) -> ParseError {
        return ParseError("edge list line " + std::to_string(line_no) + ": " + message, line_no);
    };
    auto parse_tokens = [&](std::string_view line) {
        std::vector<std::size_t> values;
        while (!line.empty()) {
            const auto end = line.find_first_of(" \t");
            const auto token = line.substr(0, end);
            std::size_t v = 0;
            const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
            if (ec != std::errc{} || ptr != token.data() + token.size())
                throw fail("expected a nonnegative integer, got '" + std::string(token) + "'");
            values.push_back(v);
            line = end == std::string_view::npos ? std::string_view{} : trim(line.substr(end));
        }
        return values;
    };

    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto values = parse_tokens(line);
        if (!builder) {
            if (values.size() != 1)
                throw fail("first line must hold the vertex count only");
            if (values[0] > kMaxVertices)
                throw Error(Errc::size_limit, "edge list declares " + std::to_string(values[0]) +
                                                  " vertices; cap is " + std::to_string(kMaxVertices));
            builder.emplace(values[0]);
            continue;
        }
        if (values.size() != 2)
            throw fail("expected 'u v'");
        try {
            builder->add_edge(values[0], values[1]);
        } catch (const Error& e) {
            throw fail(e.what());
        }
    }
    if (!builder)
        throw ParseError("edge list is empty: missing vertex count", line_no);
    return std::move(*builder).build();
}

std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + "\n";
    for (auto [u, v] : edges(g))
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::optional<Graph> Graph6Reader::next() {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_;
        if (trim(line).empty())
            continue;
        try {
            std::vector<std::string> local;
            Graph g = parse_graph6(line, options_, &local);
            for (auto& w : local)
                warnings_.push_back("line " + std::to_string(line_) + ": " + w);
            return g;
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_) + ": " + e.what(), e.position());
        }
    }
    return std::nullopt;
}

} // namespace domset
