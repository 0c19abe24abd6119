#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "domset/cli.hpp"
#include "domset/constructions.hpp"
#include "domset/graph6.hpp"
#include "domset/report.hpp"

using namespace domset;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;

    nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    Run r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string temp_file(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / ("domset_cli_" + name);
    std::ofstream(path, std::ios::binary) << contents;
    return path.string();
}

std::vector<std::size_t> plan_sizes(const nlohmann::json& plan) {
    std::vector<std::size_t> out;
    for (const auto& c : plan)
        out.push_back(c["size"].get<std::size_t>());
    return out;
}

} // namespace

TEST_CASE("formula") {
    const Run r = run({"formula", "--n", "6", "--gamma", "2", "--total"});
    CHECK(r.code == kExitOk);
    CHECK(r.json()["count"] == 12);
    CHECK(run({"formula", "--n", "7", "--gamma", "2"}).json()["count"] == 20);
    CHECK(run({"formula", "--n", "9", "--gamma", "3"}).json()["count"] == 45);
    CHECK(run({"formula", "--n", "9", "--gamma", "3"}).json()["bound"] == "lower");
    CHECK(run({"formula", "--n", "9", "--gamma", "3", "--total"}).code == kExitInfeasible);
    CHECK(run({"formula", "--n", "3", "--gamma", "2"}).code == kExitInfeasible);
}

TEST_CASE("optimize") {
    const auto j = run({"optimize", "--n", "10", "--gamma", "4"}).json();
    CHECK(plan_sizes(j["plan"]) == std::vector<std::size_t>{4, 6});
    CHECK(j["count"] == 90);
    CHECK(plan_sizes(j["prescribed"]) == std::vector<std::size_t>{5, 5});
    CHECK(j["predicted"] == 81);
}

TEST_CASE("scan") {
    const Run r = run({"scan", "--n", "5", "--total"});
    CHECK(r.code == kExitOk);
    const auto j = r.json();
    CHECK(j["max_count"] == 6);
    CHECK(j["graphs_scanned"] == 1024);
    CHECK(j["max_edges"] == 7);
    CHECK(parse_graph6(j["witness"].get<std::string>()).order() == 5);

    const std::string corpus = temp_file("corpus.g6", write_graph6(cocktail_party(6)) + "\n" +
                                                          write_graph6(extremal_gamma2(6)) + "\n");
    const auto c = run({"scan", "--n", "6", "--corpus", corpus}).json();
    CHECK(c["max_count"] == 15);
    CHECK(c["graphs_scanned"] == 2);
    CHECK(run({"scan", "--n", "5", "--corpus", corpus}).code == kExitParse);
    CHECK(run({"scan", "--n", "8"}).code == kExitSizeLimit);
}

TEST_CASE("gamma and count on files") {
    const std::string g6 = temp_file("two.g6", "C~\nCl\n");
    const Run gamma = run({"gamma", "--in", g6});
    CHECK(gamma.code == kExitOk);
    CHECK(gamma.out == "{\"n\":4,\"m\":6,\"mode\":\"dominating\",\"gamma\":1}\n"
                       "{\"n\":4,\"m\":4,\"mode\":\"dominating\",\"gamma\":2}\n");

    const std::string edges = temp_file("c4.txt", "4\n0 1\n1 2\n2 3\n0 3\n");
    const auto t = run({"count", "--in", edges, "--format", "edges", "--total", "--witness-cap", "10"}).json();
    CHECK(t["gamma"] == 2);
    CHECK(t["count"] == 4);
    CHECK(t["witnesses"].size() == 4);
    CHECK(t["witnesses"][0] == nlohmann::json::array({0, 1}));

    const auto sized = run({"count", "--in", edges, "--format", "edges", "--size", "3"}).json();
    CHECK(sized["size"] == 3);
    CHECK(sized["count"] == 4);
    CHECK_FALSE(sized.contains("witnesses"));

    const std::string isolated = temp_file("iso.txt", "3\n0 1\n");
    const Run undefined = run({"gamma", "--in", isolated, "--format", "edges", "--total"});
    CHECK(undefined.code == kExitInfeasible);
    CHECK(undefined.err.find("isolated") != std::string::npos);

    const std::string big = temp_file("big.txt", "10\n");
    CHECK(run({"count", "--in", big, "--format", "edges"}).code == kExitSizeLimit);
    CHECK(run({"count", "--in", big, "--format", "edges", "--allow-large-k"}).json()["count"] == 1);
}

TEST_CASE("construct") {
    const auto j = run({"construct", "--n", "9", "--gamma", "3"}).json();
    CHECK(j["predicted"] == 45);
    CHECK(j["m"] == 15);
    CHECK(parse_graph6(j["graph"].get<std::string>()) == build_component_graph(9, 3).graph);

    const auto out = std::filesystem::temp_directory_path() / "domset_cli_g84.txt";
    const auto k = run({"construct", "--n", "8", "--gamma", "4", "--format", "edges", "--out", out.string()}).json();
    CHECK_FALSE(k.contains("graph"));
    std::ifstream in(out);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(parse_edge_list(text.str()) == build_component_graph(8, 4).graph);
    CHECK(run({"construct", "--n", "3", "--gamma", "2"}).code == kExitInfeasible);
}

TEST_CASE("efficiency") {
    const auto j = run({"efficiency", "--n", "300", "--gamma", "3"}).json();
    CHECK(j["ratio"]["num"] == 19900);
    CHECK(j["ratio"]["den"] == 44551);
    CHECK(run({"efficiency", "--n", "10", "--gamma", "2"}).json()["ratio"]["num"] == 1);
}

TEST_CASE("exit codes and diagnostics") {
    auto one_line = [](const Run& r) { return !r.err.empty() && r.err.find('\n') == r.err.size() - 1; };

    const Run usage = run({"bogus"});
    CHECK(usage.code == kExitUsage);
    CHECK(one_line(usage));
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"formula", "--n", "6"}).code == kExitUsage);
    CHECK(run({"gamma", "--in", "x", "--format", "dot"}).code == kExitUsage);

    const Run parse = run({"gamma", "--in", temp_file("bad.g6", "C~\nD?@\n")});
    CHECK(parse.code == kExitParse);
    CHECK(parse.err.find("line 2") != std::string::npos);
    const Run lenient = run({"gamma", "--in", temp_file("bad2.g6", "D?@\n"), "--lenient"});
    CHECK(lenient.code == kExitOk);
    CHECK(lenient.err.find("warning") != std::string::npos);

    const Run missing = run({"gamma", "--in", "/nonexistent/file.g6"});
    CHECK(missing.code == kExitParse);
    CHECK(one_line(missing));

    const Run infeasible = run({"optimize", "--n", "7", "--gamma", "4"});
    CHECK(infeasible.code == kExitInfeasible);
    CHECK(one_line(infeasible));

    const Run limit = run({"scan", "--n", "9"});
    CHECK(limit.code == kExitSizeLimit);
    CHECK(one_line(limit));

    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("output is deterministic") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"optimize", "--n", "30", "--gamma", "5"},
          std::vector<std::string>{"scan", "--n", "5"},
          std::vector<std::string>{"construct", "--n", "12", "--gamma", "3"}}) {
        CHECK(run(args).out == run(args).out);
    }
    const auto timed = run({"--timing", "formula", "--n", "6", "--gamma", "2"}).json();
    CHECK(timed.contains("elapsed_ms"));
    CHECK_FALSE(run({"formula", "--n", "6", "--gamma", "2"}).json().contains("elapsed_ms"));
}

TEST_CASE("large counts become strings") {
    CHECK(count_json(BigInt(kMaxJsonSafeInteger)).is_number());
    CHECK(count_json(BigInt(kMaxJsonSafeInteger) + 1).is_string());
    const auto j = run({"formula", "--n", "4000", "--gamma", "6"}).json();
    CHECK(j["count"].is_string());
    CHECK(BigInt(j["count"].get<std::string>()) == prescribed_plan(4000, 6).total_count);
}
