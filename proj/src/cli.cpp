#include "domset/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "domset/constructions.hpp"
#include "domset/domination.hpp"
#include "domset/error.hpp"
#include "domset/graph6.hpp"
#include "domset/partition.hpp"
#include "domset/report.hpp"
#include "domset/search.hpp"

namespace domset {

namespace {

struct InputArgs {
    std::string path;
    std::string format = "g6";
    bool lenient = false;
};

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::input, "cannot open input file '" + path + "'");
    return in;
}

// Calls `fn` for every graph in the input; edge lists hold exactly one graph.
void for_each_input_graph(const InputArgs& args, std::ostream& err, const std::function<void(const Graph&)>& fn) {
    std::ifstream in = open_input(args.path);
    if (args.format == "edges") {
        std::stringstream buffer;
        buffer << in.rdbuf();
        fn(parse_edge_list(buffer.str()));
        return;
    }
    Graph6Reader reader(in, Graph6Options{args.lenient});
    std::size_t seen = 0;
    while (auto g = reader.next()) {
        fn(*g);
        ++seen;
    }
    for (const auto& w : reader.warnings())
        err << "warning: " << w << "\n";
    if (seen == 0)
        throw ParseError("input '" + args.path + "' contains no graph6 records", 0);
}

void add_input_options(CLI::App* cmd, InputArgs& args) {
    cmd->add_option("--in", args.path, "Input graph file")->required();
    cmd->add_option("--format", args.format, "Input format")->check(CLI::IsMember({"g6", "edges"}));
    cmd->add_flag("--lenient", args.lenient, "Accept nonzero graph6 padding bits");
}

Mode mode_of(bool total) { return total ? Mode::total : Mode::dominating; }

} // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Domination numbers, minimum dominating set counts and extremal constructions", "domset"};
    app.require_subcommand(1);
    bool timing = false;
    app.add_flag("--timing", timing, "Add elapsed_ms to reports");

    std::function<void()> action;
    const auto started = std::chrono::steady_clock::now();
    auto emit = [&](Json report) {
        if (timing) {
            const auto elapsed = std::chrono::steady_clock::now() - started;
            report["elapsed_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
        }
        out << report.dump() << "\n";
    };

    // gamma
    InputArgs gamma_in;
    bool gamma_total = false;
    auto* gamma_cmd = app.add_subcommand("gamma", "Domination or total domination number");
    add_input_options(gamma_cmd, gamma_in);
    gamma_cmd->add_flag("--total", gamma_total, "Total domination");
    gamma_cmd->callback([&] {
        action = [&] {
            for_each_input_graph(gamma_in, err, [&](const Graph& g) {
                const Mode mode = mode_of(gamma_total);
                Json j = Json::object();
                j["n"] = g.order();
                j["m"] = g.size();
                j["mode"] = std::string(to_string(mode));
                j["gamma"] = minimum_size(g, mode);
                emit(std::move(j));
            });
        };
    });

    // count
    InputArgs count_in;
    bool count_total = false;
    std::optional<std::size_t> count_size;
    CountOptions count_opts{.threads = 1, .allow_large_k = false, .witness_cap = 0};
    auto* count_cmd = app.add_subcommand("count", "Count (total) dominating sets of a given or minimum size");
    add_input_options(count_cmd, count_in);
    count_cmd->add_flag("--total", count_total, "Total domination");
    count_cmd->add_option("--size", count_size, "Set size (default: the minimum)");
    count_cmd->add_option("--witness-cap", count_opts.witness_cap, "Number of sets to list");
    count_cmd->add_option("--threads", count_opts.threads, "Worker threads (0 = all cores)");
    count_cmd->add_flag("--allow-large-k", count_opts.allow_large_k, "Permit set sizes above 7");
    count_cmd->callback([&] {
        action = [&] {
            for_each_input_graph(count_in, err, [&](const Graph& g) {
                const Mode mode = mode_of(count_total);
                const DominationReport r = count_size ? count_sets_report(g, *count_size, mode, count_opts)
                                                      : count_minimum(g, mode, count_opts);
                Json j = Json::object();
                j["n"] = g.order();
                j["m"] = g.size();
                j["mode"] = std::string(to_string(mode));
                j[count_size ? "size" : "gamma"] = r.gamma;
                j["count"] = count_json(r.count);
                if (count_opts.witness_cap > 0)
                    j["witnesses"] = witnesses_json(r.witnesses);
                emit(std::move(j));
            });
        };
    });

    // construct
    std::size_t construct_n = 0;
    std::size_t construct_x = 0;
    std::string construct_out;
    std::string construct_format = "g6";
    auto* construct_cmd = app.add_subcommand("construct", "Build the component graph of order N with domination number X");
    construct_cmd->add_option("--n", construct_n, "Order")->required();
    construct_cmd->add_option("--gamma", construct_x, "Domination number")->required();
    construct_cmd->add_option("--out", construct_out, "Write the graph to this file");
    construct_cmd->add_option("--format", construct_format, "Graph format")->check(CLI::IsMember({"g6", "edges"}));
    construct_cmd->callback([&] {
        action = [&] {
            const Construction c = build_component_graph(construct_n, construct_x);
            const std::string text =
                construct_format == "edges" ? write_edge_list(c.graph) : write_graph6(c.graph) + "\n";
            Json j = Json::object();
            j["n"] = c.graph.order();
            j["m"] = c.graph.size();
            j["gamma"] = construct_x;
            j["plan"] = plan_json(c.plan);
            j["predicted"] = count_json(c.plan.total_count);
            if (construct_out.empty()) {
                j["graph"] = construct_format == "edges" ? text : write_graph6(c.graph);
            } else {
                std::ofstream file(construct_out, std::ios::binary);
                if (!file || !(file << text))
                    throw Error(Errc::input, "cannot write output file '" + construct_out + "'");
            }
            emit(std::move(j));
        };
    });

    // formula
    std::size_t formula_n = 0;
    std::size_t formula_x = 0;
    bool formula_total = false;
    auto* formula_cmd = app.add_subcommand("formula", "Closed-form maximum counts (gamma <= 2) or product lower bound");
    formula_cmd->add_option("--n", formula_n, "Order")->required();
    formula_cmd->add_option("--gamma", formula_x, "Domination number")->required();
    formula_cmd->add_flag("--total", formula_total, "Total domination");
    formula_cmd->callback([&] {
        action = [&] {
            const Mode mode = mode_of(formula_total);
            Json j = Json::object();
            j["n"] = formula_n;
            j["mode"] = std::string(to_string(mode));
            j["gamma"] = formula_x;
            if (formula_x == 2) {
                j["count"] = count_json(formula_total ? max_total_dominating_pairs(formula_n)
                                                      : max_dominating_pairs(formula_n));
                j["bound"] = "exact";
            } else if (formula_total) {
                throw Error(Errc::infeasible_order, "total domination closed form exists only for gamma = 2");
            } else {
                const PartitionPlan plan = prescribed_plan(formula_n, formula_x);
                j["count"] = count_json(plan.total_count);
                j["bound"] = formula_x == 1 ? "exact" : "lower";
                if (formula_x >= 3)
                    j["plan"] = plan_json(plan);
            }
            emit(std::move(j));
        };
    });

    // optimize
    std::size_t optimize_n = 0;
    std::size_t optimize_x = 0;
    auto* optimize_cmd = app.add_subcommand("optimize", "Exact optimal component allocation");
    optimize_cmd->add_option("--n", optimize_n, "Order")->required();
    optimize_cmd->add_option("--gamma", optimize_x, "Domination number")->required();
    optimize_cmd->callback([&] {
        action = [&] {
            const PartitionPlan best = optimize_allocation(optimize_n, optimize_x);
            PartitionPlan prescribed = prescribed_plan(optimize_n, optimize_x);
            canonicalize(prescribed);
            Json j = Json::object();
            j["n"] = optimize_n;
            j["gamma"] = optimize_x;
            j["plan"] = plan_json(best);
            j["count"] = count_json(best.total_count);
            j["prescribed"] = plan_json(prescribed);
            j["predicted"] = count_json(prescribed.total_count);
            emit(std::move(j));
        };
    });

    // scan
    std::size_t scan_n = 0;
    bool scan_total = false;
    std::size_t scan_target = 2;
    InputArgs corpus;
    ScanOptions scan_opts;
    auto* scan_cmd = app.add_subcommand("scan", "Exhaustive maximum count over all graphs of order N");
    scan_cmd->add_option("--n", scan_n, "Order")->required();
    scan_cmd->add_flag("--total", scan_total, "Total domination");
    scan_cmd->add_option("--gamma", scan_target, "Target (total) domination number");
    scan_cmd->add_option("--corpus", corpus.path, "graph6 corpus instead of labeled enumeration");
    scan_cmd->add_flag("--lenient", corpus.lenient, "Accept nonzero graph6 padding bits");
    scan_cmd->add_option("--threads", scan_opts.threads, "Worker threads (0 = all cores)");
    scan_cmd->callback([&] {
        action = [&] {
            const Mode mode = mode_of(scan_total);
            ExtremalRecord rec;
            if (corpus.path.empty()) {
                rec = scan_labeled(scan_n, mode, scan_target, scan_opts);
            } else {
                std::ifstream in = open_input(corpus.path);
                Graph6Reader reader(in, Graph6Options{corpus.lenient});
                rec = extremal_scan(reader, mode, scan_target);
                for (const auto& w : reader.warnings())
                    err << "warning: " << w << "\n";
                if (rec.graphs_scanned > 0 && rec.n != scan_n)
                    throw Error(Errc::input, "corpus has order " + std::to_string(rec.n) + ", expected " +
                                                 std::to_string(scan_n));
                rec.n = scan_n;
            }
            Json j = Json::object();
            j["n"] = rec.n;
            j["mode"] = std::string(to_string(mode));
            j["gamma"] = rec.target_gamma;
            j["max_count"] = count_json(rec.max_count);
            j["witness"] = rec.witness ? Json(rec.witness_graph6) : Json(nullptr);
            j["graphs_scanned"] = count_json(rec.graphs_scanned);
            j["qualifying"] = count_json(rec.qualifying);
            j["max_edges"] = rec.max_edges_gamma_at_least_target ? Json(*rec.max_edges_gamma_at_least_target)
                                                                  : Json(nullptr);
            emit(std::move(j));
        };
    });

    // efficiency
    std::size_t eff_n = 0;
    std::size_t eff_x = 0;
    auto* eff_cmd = app.add_subcommand("efficiency", "Fraction of X-sets that dominate the component graph");
    eff_cmd->add_option("--n", eff_n, "Order")->required();
    eff_cmd->add_option("--gamma", eff_x, "Domination number")->required();
    eff_cmd->callback([&] {
        action = [&] {
            const EfficiencyReport r = efficiency_ratio(eff_n, eff_x);
            Json j = Json::object();
            j["n"] = r.n;
            j["gamma"] = r.x;
            j["predicted"] = count_json(r.predicted);
            j["subsets"] = count_json(r.subsets);
            j["ratio"] = rational_json(r.ratio);
            j["ratio_decimal"] = r.ratio.convert_to<double>();
            j["reference_fraction"] = r.reference_fraction;
            emit(std::move(j));
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (action)
            action();
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace domset
