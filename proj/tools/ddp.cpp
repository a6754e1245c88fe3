// Command-line front end: exact domination numbers, constructive partitions,
// family construction/recognition, enumeration streams, and the verification
// suite. Exit codes: 0 ok, 1 domain error, 2 theorem violation,
// 3 conjecture counterexample, 64 usage error.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ddp/canonical.hpp"
#include "ddp/constructions.hpp"
#include "ddp/enumeration.hpp"
#include "ddp/harness.hpp"
#include "ddp/io.hpp"
#include "ddp/recognizers.hpp"
#include "ddp/solver.hpp"

namespace {

using nlohmann::ordered_json;

ddp::Graph read_graph(const std::string& input, const std::string& format) {
    std::string text;
    if (input.empty() || input == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(input);
        if (!in) throw ddp::ParseError("cannot open input file: " + input);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    ddp::GraphFormat fmt;
    if (format == "edgelist") {
        fmt = ddp::GraphFormat::EdgeList;
    } else if (format == "graph6") {
        fmt = ddp::GraphFormat::Graph6;
    } else {
        fmt = ddp::detect_format(text);
    }
    return ddp::parse_graph(text, fmt);
}

// Small textual graph specs for --h style options: "path:4", "star:3",
// "cycle:6", "complete:3", "kbip:2,3", "double-star:2,2", or "@file".
ddp::Graph parse_graph_spec(const std::string& spec) {
    if (!spec.empty() && spec[0] == '@') return read_graph(spec.substr(1), "auto");
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    std::vector<int> args;
    if (colon != std::string::npos) {
        std::istringstream in(spec.substr(colon + 1));
        std::string item;
        while (std::getline(in, item, ',')) args.push_back(std::stoi(item));
    }
    auto want = [&](size_t k) {
        if (args.size() != k)
            throw ddp::ParameterOutOfRange("graph spec '" + spec + "' needs " +
                                           std::to_string(k) + " parameter(s)");
    };
    if (name == "path") { want(1); return ddp::path_graph(args[0]); }
    if (name == "cycle") { want(1); return ddp::cycle_graph(args[0]); }
    if (name == "star") { want(1); return ddp::star_graph(args[0]); }
    if (name == "complete") { want(1); return ddp::complete_graph(args[0]); }
    if (name == "kbip") { want(2); return ddp::complete_bipartite_graph(args[0], args[1]); }
    if (name == "double-star") { want(2); return ddp::double_star(args[0], args[1]); }
    throw ddp::ParameterOutOfRange("unknown graph spec '" + spec + "'");
}

void emit(const std::string& text, const std::string& output) {
    if (output.empty() || output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(output);
    if (!out) throw ddp::ParseError("cannot open output file: " + output);
    out << text;
}

std::string graphs_to_text(const std::vector<ddp::Graph>& graphs, const std::string& format) {
    std::ostringstream out;
    for (const auto& g : graphs) {
        if (format == "edgelist") {
            out << ddp::serialize_graph(g, ddp::GraphFormat::EdgeList);
            if (graphs.size() > 1) out << "%\n";  // record separator
        } else {
            out << ddp::serialize_graph(g, ddp::GraphFormat::Graph6) << "\n";
        }
    }
    return out.str();
}

int run(int argc, char** argv) {
    CLI::App app{"d-distance p-packing domination toolkit"};
    app.require_subcommand(1);

    std::string input = "-", in_format = "auto", output = "-";
    int d = 1, p = 0;

    auto add_graph_opts = [&](CLI::App* cmd) {
        cmd->add_option("-i,--input", input, "graph file, '-' for stdin");
        cmd->add_option("--in-format", in_format, "auto | edgelist | graph6")
            ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
        cmd->add_option("-o,--output", output, "output path, '-' for stdout");
    };

    // gamma
    auto* cmd_gamma = app.add_subcommand("gamma", "exact domination number");
    add_graph_opts(cmd_gamma);
    cmd_gamma->add_option("-d", d, "distance radius")->required()->check(CLI::PositiveNumber);
    cmd_gamma->add_option("-p", p, "packing separation")->check(CLI::NonNegativeNumber);
    bool use_bruteforce = false;
    cmd_gamma->add_flag("--bruteforce", use_bruteforce, "use the subset-enumeration oracle");

    // partition
    auto* cmd_partition = app.add_subcommand(
        "partition", "partition a connected bipartite graph into d+1 independent dominating sets");
    add_graph_opts(cmd_partition);
    cmd_partition->add_option("-d", d, "distance radius")->required()->check(CLI::PositiveNumber);

    // construct
    auto* cmd_construct = app.add_subcommand("construct", "build a named graph or family");
    std::string family, h_spec = "path:2", out_format = "edgelist";
    int n_arg = 0, k_arg = 2, t1 = 2, t2 = 2, max_order = 12;
    bool allow_disconnected_h = false;
    cmd_construct
        ->add_option("family", family,
                     "corona | subdivision | gnkd | joined-stars | zeta1 | family-t | family-b | "
                     "family-f | family-fprime | path | cycle | star | complete | kbip | "
                     "double-star")
        ->required();
    cmd_construct->set_help_flag("--help", "print help");  // frees --h for the base graph
    cmd_construct->add_option("--h", h_spec, "base graph spec (e.g. path:3, kbip:2,2, @file)");
    cmd_construct->add_option("-d", d, "distance parameter");
    cmd_construct->add_option("-n", n_arg, "order parameter");
    cmd_construct->add_option("-k", k_arg, "path copies per vertex (gnkd)");
    cmd_construct->add_option("--t1", t1, "first star size (joined-stars)");
    cmd_construct->add_option("--t2", t2, "second star size (joined-stars)");
    cmd_construct->add_option("--max-order", max_order, "cap for family generators");
    cmd_construct->add_flag("--allow-disconnected-h", allow_disconnected_h,
                            "family-b only: include coronas of disconnected base graphs");
    cmd_construct->add_option("--out-format", out_format, "edgelist | graph6")
        ->check(CLI::IsMember({"edgelist", "graph6"}));
    cmd_construct->add_option("-o,--output", output, "output path, '-' for stdout");

    // recognize
    auto* cmd_recognize = app.add_subcommand("recognize", "test family membership");
    add_graph_opts(cmd_recognize);
    std::string rec_family;
    cmd_recognize
        ->add_option("--family", rec_family, "zeta1 | corona | family-t | family-b | family-f | "
                                             "family-fprime")
        ->required();
    cmd_recognize->add_option("-d", d, "distance parameter");

    // enumerate
    auto* cmd_enumerate = app.add_subcommand("enumerate", "stream unlabeled graphs of one order");
    std::string space_name = "trees";
    int order = 1, shards = 1, shard_index = -1;
    int min_leaves = -1, max_leaves = -1, min_diam = -1, max_diam = -1;
    bool count_only = false;
    cmd_enumerate->add_option("--space", space_name, "trees | bipartite")
        ->check(CLI::IsMember({"trees", "bipartite"}));
    cmd_enumerate->add_option("-n", order, "graph order")->required()->check(CLI::PositiveNumber);
    cmd_enumerate->add_option("--min-leaves", min_leaves, "filter: minimum leaf count");
    cmd_enumerate->add_option("--max-leaves", max_leaves, "filter: maximum leaf count");
    cmd_enumerate->add_option("--min-diameter", min_diam, "filter: minimum diameter");
    cmd_enumerate->add_option("--max-diameter", max_diam, "filter: maximum diameter");
    cmd_enumerate->add_option("--shards", shards, "number of shards")->check(CLI::PositiveNumber);
    cmd_enumerate->add_option("--shard", shard_index, "emit only this shard (0-based)");
    cmd_enumerate->add_flag("--count", count_only, "print the count instead of the graphs");
    cmd_enumerate->add_option("--out-format", out_format, "edgelist | graph6")
        ->check(CLI::IsMember({"edgelist", "graph6"}));
    cmd_enumerate->add_option("-o,--output", output, "output path, '-' for stdout");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run the theorem verification suite");
    std::string config_arg = "default", json_out;
    cmd_verify->add_option("--config", config_arg, "'default' or a key=value config file");
    cmd_verify->add_option("--json", json_out, "also write the full JSON report here");
    cmd_verify->add_option("-o,--output", output, "TSV summary path, '-' for stdout");

    // conjecture
    auto* cmd_conjecture = app.add_subcommand("conjecture", "scan for conjecture counterexamples");
    int n_max = 8;
    cmd_conjecture->add_option("-d", d, "distance radius (>= 2)")->required();
    cmd_conjecture->add_option("--n-max", n_max, "largest order to scan");
    cmd_conjecture->add_option("--shards", shards, "parallel shards")->check(CLI::PositiveNumber);
    cmd_conjecture->add_option("-o,--output", output, "report path, '-' for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    if (cmd_gamma->parsed()) {
        ddp::Graph g = read_graph(input, in_format);
        ddp::GammaWitness w = use_bruteforce ? ddp::gamma_bruteforce(g, {d, p})
                                             : ddp::gamma(g, {d, p});
        ordered_json j;
        j["n"] = g.order();
        j["d"] = d;
        j["p"] = p;
        if (w.finite)
            j["value"] = w.value;
        else
            j["value"] = "inf";
        j["witness"] = w.witness;
        emit(j.dump(2) + "\n", output);
        return 0;
    }

    if (cmd_partition->parsed()) {
        ddp::Graph g = read_graph(input, in_format);
        ddp::LevelPartition parts = ddp::level_partition(g, d);
        bool ok = ddp::verify_partition(g, parts, d);
        ordered_json j;
        j["n"] = g.order();
        j["d"] = d;
        j["parts"] = parts.parts;
        j["verified"] = ok;
        emit(j.dump(2) + "\n", output);
        return ok ? 0 : 2;
    }

    if (cmd_construct->parsed()) {
        std::vector<ddp::Graph> graphs;
        if (family == "corona") {
            graphs.push_back(ddp::corona(parse_graph_spec(h_spec), d).first);
        } else if (family == "subdivision") {
            graphs.push_back(ddp::d_subdivision(parse_graph_spec(h_spec), d));
        } else if (family == "gnkd") {
            graphs.push_back(ddp::counterexample_gnkd(n_arg, k_arg, d));
        } else if (family == "joined-stars") {
            graphs.push_back(ddp::joined_subdivided_stars(t1, t2, d));
        } else if (family == "zeta1") {
            graphs = ddp::zeta1_members(max_order);
        } else if (family == "family-t") {
            graphs = ddp::family_T_d(max_order, d);
        } else if (family == "family-b") {
            graphs = ddp::family_B_d(max_order, d, allow_disconnected_h);
        } else if (family == "family-f") {
            graphs = ddp::family_F_d(max_order, d);
        } else if (family == "family-fprime") {
            graphs = ddp::family_Fprime_d(max_order, d);
        } else if (family == "path" || family == "cycle" || family == "star" ||
                   family == "complete") {
            graphs.push_back(parse_graph_spec(family + ":" + std::to_string(n_arg)));
        } else if (family == "kbip" || family == "double-star") {
            graphs.push_back(parse_graph_spec(family + ":" + std::to_string(t1) + "," +
                                              std::to_string(t2)));
        } else {
            throw ddp::ParameterOutOfRange("unknown family '" + family + "'");
        }
        emit(graphs_to_text(graphs, out_format), output);
        return 0;
    }

    if (cmd_recognize->parsed()) {
        ddp::Graph g = read_graph(input, in_format);
        ordered_json j;
        j["family"] = rec_family;
        j["n"] = g.order();
        if (rec_family == "zeta1") {
            j["member"] = ddp::in_zeta1(g);
        } else if (rec_family == "corona") {
            j["d"] = d;
            auto decomposition = ddp::is_corona(g, d);
            j["member"] = decomposition.has_value();
            if (decomposition) {
                j["anchors"] = decomposition->anchors;
                ordered_json paths = ordered_json::object();
                for (const auto& [anchor, path] : decomposition->path_of)
                    paths[std::to_string(anchor)] = path;
                j["paths"] = std::move(paths);
            }
        } else if (rec_family == "family-t") {
            j["d"] = d;
            j["member"] = ddp::in_T_d(g, d);
        } else if (rec_family == "family-b") {
            j["d"] = d;
            j["member"] = ddp::in_B_d(g, d);
        } else if (rec_family == "family-f") {
            j["d"] = d;
            j["member"] = ddp::in_F_d(g, d);
        } else if (rec_family == "family-fprime") {
            j["d"] = d;
            j["member"] = ddp::in_Fprime_d(g, d);
        } else {
            throw ddp::ParameterOutOfRange("unknown family '" + rec_family + "'");
        }
        emit(j.dump(2) + "\n", output);
        return 0;
    }

    if (cmd_enumerate->parsed()) {
        ddp::EnumerationSpace space;
        space.kind = space_name == "trees" ? ddp::SpaceKind::Trees
                                           : ddp::SpaceKind::ConnectedBipartite;
        space.order = order;
        if (min_leaves >= 0) space.min_leaves = min_leaves;
        if (max_leaves >= 0) space.max_leaves = max_leaves;
        if (min_diam >= 0) space.min_diameter = min_diam;
        if (max_diam >= 0) space.max_diameter = max_diam;
        std::vector<ddp::Graph> stream = ddp::enumerate_space(space);
        if (shard_index >= 0) {
            if (shard_index >= shards)
                throw ddp::ParameterOutOfRange("shard index out of range");
            stream = ddp::shard(stream, shards)[static_cast<size_t>(shard_index)];
        }
        if (count_only) {
            emit(std::to_string(stream.size()) + "\n", output);
        } else {
            emit(graphs_to_text(stream, out_format), output);
        }
        return 0;
    }

    if (cmd_verify->parsed()) {
        ddp::SuiteConfig config;
        if (config_arg == "default") {
            config = ddp::default_suite_config();
        } else {
            std::ifstream in(config_arg);
            if (!in) throw ddp::ConfigError("cannot open config file: " + config_arg);
            std::ostringstream buf;
            buf << in.rdbuf();
            config = ddp::parse_suite_config(buf.str());
        }
        auto reports = ddp::run_suite(config);
        if (!json_out.empty()) emit(ddp::suite_to_json(reports), json_out);
        emit(ddp::suite_to_tsv(reports), output);
        return ddp::suite_exit_code(reports);
    }

    if (cmd_conjecture->parsed()) {
        auto report = ddp::check_conjecture(d, n_max, shards).to_report();
        emit(ddp::report_to_json(report), output);
        return report.pass() ? 0 : 3;
    }

    return 64;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ddp::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
