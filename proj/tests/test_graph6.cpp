#include <doctest.h>

#include <random>
#include <sstream>

#include "domset/constructions.hpp"
#include "domset/error.hpp"
#include "domset/graph6.hpp"
#include "domset/search.hpp"
#include "support.hpp"

using namespace domset;
using domset::testing::c4;

namespace {

std::size_t parse_error_position(std::string_view text, bool graph6 = true) {
    try {
        if (graph6)
            parse_graph6(text);
        else
            parse_edge_list(text);
    } catch (const ParseError& e) {
        return e.position();
    }
    FAIL("expected a parse error for '" << std::string(text) << "'");
    return 0;
}

} // namespace

TEST_CASE("golden graph6 records") {
    CHECK(parse_graph6("C~") == complete_graph(4));
    CHECK(parse_graph6("Cl") == c4());
    CHECK(parse_graph6("?").order() == 0);
    CHECK(parse_graph6(">>graph6<<Cl\n") == c4());
    CHECK(write_graph6(complete_graph(4)) == "C~");
    // Parts {0,1}, {2,3} give the 4-cycle 0-2-1-3-0: bits 011110.
    CHECK(write_graph6(cocktail_party(4)) == "C]");
    CHECK(write_graph6(cycle_graph(4)) == "Cl");
    CHECK(write_graph6(new_graph(5)) == "D??");
    CHECK(write_graph6(new_graph(0)) == "?");
}

TEST_CASE("graph6 size field forms") {
    const Graph big = cocktail_party(64);
    const std::string encoded = write_graph6(big);
    // n = 64 uses 126 followed by 64 as three 6-bit groups: 000000 000001 000000.
    CHECK(static_cast<unsigned char>(encoded[0]) == 126);
    CHECK(encoded.substr(1, 3) == "?@?");
    CHECK(encoded.size() == 4 + (64 * 63 / 2 + 5) / 6);
    CHECK(parse_graph6(encoded) == big);
    CHECK(parse_graph6(write_graph6(new_graph(62))) == new_graph(62));
    CHECK(write_graph6(new_graph(62))[0] == '}');
    // A four-vertex graph written with the long size form is non-minimal.
    const std::string long_k4 = "~??C~";
    CHECK_THROWS_AS(parse_graph6(long_k4), ParseError);
    CHECK(parse_graph6(long_k4, Graph6Options{true}) == complete_graph(4));
}

TEST_CASE("graph6 errors") {
    CHECK(parse_error_position("C") == 1);       // truncated
    CHECK(parse_error_position("C~~") == 2);     // trailing byte
    CHECK(parse_error_position("C\x7f") == 1);   // out of range
    CHECK(parse_error_position("C ") == 1);
    CHECK(parse_error_position("") == 0);
    CHECK(parse_error_position(">>graph6<<C!") == 11);
    // "C" + 6 bits leaves no padding; n=5 leaves two padding bits in the second byte.
    CHECK(parse_error_position("D?@") == 2);
    std::vector<std::string> warnings;
    CHECK(parse_graph6("D?@", Graph6Options{true}, &warnings) == new_graph(5));
    CHECK(warnings.size() == 1);
    try {
        parse_graph6("~A??");  // 8192 vertices
        FAIL("oversized graph accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::size_limit);
    }
}

TEST_CASE("graph6 round trip on every labeled graph with n <= 6") {
    for (std::size_t n = 0; n <= 6; ++n) {
        LabeledGraphs all = enumerate_labeled_graphs(n);
        while (auto g = all.next())
            REQUIRE(parse_graph6(write_graph6(*g)) == *g);
    }
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 10000; ++trial) {
        const std::size_t n = rng() % 41;
        const Graph g = testing::random_graph(rng, n, static_cast<double>(rng() % 101) / 100.0);
        REQUIRE(parse_graph6(write_graph6(g)) == g);
    }
}

TEST_CASE("graph6 reader streams records and reports lines") {
    std::stringstream in("C~\n\nCl\r\nD?@\n");
    Graph6Reader reader(in);
    CHECK(*reader.next() == complete_graph(4));
    CHECK(*reader.next() == c4());
    try {
        reader.next();
        FAIL("padding accepted");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
}

TEST_CASE("edge lists") {
    CHECK(parse_edge_list("4\n0 1\n1 2\n2 3\n0 3") == c4());
    CHECK(parse_edge_list("2\n# comment\n0 1") == complete_graph(2));
    CHECK(parse_edge_list("3\n0 1 # trailing\n1 0\n") == testing::graph_of(3, {{0, 1}}));
    CHECK(parse_edge_list(write_edge_list(cocktail_party(8))) == cocktail_party(8));
    CHECK(write_edge_list(c4()) == "4\n0 1\n1 2\n0 3\n2 3\n");

    CHECK(parse_error_position("3\n0 0", false) == 2);
    CHECK(parse_error_position("3\n# c\n0 1\n0 3", false) == 4);
    CHECK(parse_error_position("3\n0 x", false) == 2);
    CHECK(parse_error_position("3\n0 1 2", false) == 2);
    CHECK(parse_error_position("3 4\n", false) == 1);
    CHECK(parse_error_position("-1\n", false) == 1);
    CHECK(parse_error_position("# only a comment\n", false) == 1);
    try {
        parse_edge_list("5000\n");
        FAIL("oversized edge list accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::size_limit);
    }
}
