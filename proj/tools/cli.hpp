#pragma once

// Command-line front end for the wtoll library. Kept in a header so the test
// suite can drive it in-process.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wtoll/wtoll.hpp"

namespace wtoll::cli {

using json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kInternal = 1, kUsage = 2, kDisconnected = 3, kCapExceeded = 4 };

/// FNV-1a over the graph6 encoding, as 16 hex digits.
inline std::string fingerprint(const Graph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : to_graph6(g)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline json to_json(const VertexSet& s) { return json(s.to_vector()); }

inline json to_json(const InvariantResult& r) {
    json j{{"value", r.value}, {"witness", to_json(r.witness)}, {"case_tag", std::string(to_string(r.tag))}};
    if (r.exclusive_sizes) {
        j["x1"] = r.exclusive_sizes->first;
        j["x2"] = r.exclusive_sizes->second;
    }
    if (r.tag == CaseTag::WtnK0 || r.tag == CaseTag::WtnK1 || r.tag == CaseTag::WtnK2) {
        json classes = json::array();
        for (const auto& c : r.extreme_classes) classes.push_back(to_json(c));
        j["extreme_classes"] = classes;
    }
    return j;
}

inline json to_json(const AtomDecomposition& d) {
    json atoms = json::array();
    std::size_t extremal = 0;
    for (std::size_t i = 0; i < d.atoms.size(); ++i) {
        atoms.push_back({{"vertices", to_json(d.atoms[i])},
                         {"shared", to_json(d.shared[i])},
                         {"exclusive", to_json(d.exclusive[i])},
                         {"extremal", static_cast<bool>(d.extremal[i])}});
        extremal += d.extremal[i] ? 1 : 0;
    }
    return {{"atom_count", d.atoms.size()}, {"extremal_count", extremal}, {"atoms", atoms}};
}

inline std::string join(const VertexSet& s) {
    std::string out;
    for (auto v : s) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

inline std::string plain(const json& result) {
    std::ostringstream out;
    for (const auto& [key, value] : result.items()) {
        out << key;
        if (value.is_array()) {
            for (const auto& x : value) out << ' ' << (x.is_array() ? "[" + x.dump() + "]" : x.dump());
        } else {
            out << ' ' << (value.is_string() ? value.get<std::string>() : value.dump());
        }
        out << '\n';
    }
    return out.str();
}

struct Options {
    bool plain = false;
    std::string format;
};

inline Graph load(const std::string& path, const Options& opts) {
    std::optional<GraphFormat> fmt;
    if (opts.format == "el") fmt = GraphFormat::EdgeList;
    else if (opts.format == "g6") fmt = GraphFormat::Graph6;
    else if (!opts.format.empty()) throw ArgumentError("unknown --format '" + opts.format + "' (use el or g6)");
    return read_graph(path, fmt);
}

inline VertexSet vertex_set(const Graph& g, const std::vector<std::size_t>& vs) {
    VertexSet s(g.order());
    for (auto v : vs) {
        require_vertex(g, v);
        s.insert(v);
    }
    return s;
}

template <typename F>
auto timed(F&& f, double& ms) {
    const auto t0 = std::chrono::steady_clock::now();
    auto r = f();
    ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline void emit(std::ostream& out, const Options& opts, const std::string& command, const Graph& g, json result,
                 double ms) {
    if (opts.plain) {
        out << plain(result);
        return;
    }
    json report{{"command", command},
                {"input", {{"n", g.order()}, {"m", g.size()}, {"hash", fingerprint(g)}}},
                {"result", std::move(result)},
                {"ms", ms}};
    out << report.dump() << '\n';
}

/// Least nonadjacent pair, or the first two vertices of a complete graph.
inline VertexSet bench_pair(const Graph& g) {
    for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b = a + 1; b < g.order(); ++b)
            if (!g.adjacent(a, b)) return VertexSet(g.order(), {a, b});
    VertexSet s(g.order());
    for (Vertex v = 0; v < std::min<std::size_t>(2, g.order()); ++v) s.insert(v);
    return s;
}

inline int bench(const std::string& dir, const std::vector<std::string>& ops, const Options& opts, std::ostream& out,
                 std::ostream& err) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw ArgumentError("not a directory: " + dir);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    out << "graph,n,m,op,value,ms\n";
    for (const auto& path : files) {
        Graph g;
        try {
            g = load(path.string(), opts);
        } catch (const std::exception& e) {
            err << "warning: skipping " << path.filename().string() << ": " << e.what() << '\n';
            continue;
        }
        const bool connected = is_connected(g);
        for (const auto& op : ops) {
            if ((op == "wtn" || op == "wth") && !connected) {
                err << "warning: " << path.filename().string() << " is disconnected, skipping " << op << '\n';
                continue;
            }
            double ms = 0;
            std::size_t value = 0;
            if (op == "interval") value = timed([&] { return interval(g, bench_pair(g)); }, ms).size();
            else if (op == "hull") value = timed([&] { return hull(g, bench_pair(g)); }, ms).size();
            else if (op == "wtn") value = timed([&] { return wtn(g); }, ms).value;
            else if (op == "wth") value = timed([&] { return wth(g); }, ms).value;
            else throw ArgumentError("unknown bench op '" + op + "'");
            out << path.filename().string() << ',' << g.order() << ',' << g.size() << ',' << op << ',' << value << ','
                << std::fixed << std::setprecision(3) << ms << '\n';
            out.unsetf(std::ios::floatfield);
        }
    }
    return kOk;
}

inline Graph generate(const std::string& family, const std::vector<std::string>& params, std::uint64_t seed,
                      std::vector<std::string>& comments, const Options& opts) {
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw ArgumentError("family '" + family + "' takes " + std::to_string(count) + " parameter(s)");
    };
    auto count_at = [&](std::size_t i) {
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(params[i], &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != params[i].size() || params[i].front() == '-')
            throw ArgumentError("expected a non-negative integer, got '" + params[i] + "'");
        return static_cast<std::size_t>(v);
    };
    if (family == "path") {
        need(1);
        return gen::path(count_at(0));
    }
    if (family == "cycle") {
        need(1);
        return gen::cycle(count_at(0));
    }
    if (family == "complete") {
        need(1);
        return gen::complete(count_at(0));
    }
    if (family == "star") {
        need(1);
        return gen::star(count_at(0));
    }
    if (family == "bowtie") {
        need(0);
        return gen::bowtie();
    }
    if (family == "random-gnp") {
        need(2);
        double p = 0;
        std::size_t pos = 0;
        try {
            p = std::stod(params[1], &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != params[1].size() || pos == 0 || p < 0 || p > 1)
            throw ArgumentError("edge probability must be in [0, 1], got '" + params[1] + "'");
        comments.push_back("random-gnp n=" + params[0] + " p=" + params[1] + " seed=" + std::to_string(seed));
        return gen::random_gnp(count_at(0), p, seed);
    }
    if (family == "clique-reduction") {
        need(2);
        const auto source = load(params[0], opts);
        auto red = clique_reduction(source, count_at(1));
        comments = red.comments(source.order());
        return red.graph;
    }
    throw ArgumentError("unknown family '" + family +
                        "' (path, cycle, complete, star, bowtie, random-gnp, clique-reduction)");
}

/// Runs the CLI; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"wtoll: weakly toll convexity toolkit"};
    app.require_subcommand(1);
    Options opts;
    app.add_flag("--plain", opts.plain, "Human-readable output instead of JSON");
    app.add_option("--format", opts.format, "Graph file format: el or g6 (default: by extension)");

    std::string graph_path;
    std::vector<std::size_t> vertices;
    std::size_t wtc_cap = kWtcCap;
    bool no_twin_pruning = false;
    std::string family;
    std::vector<std::string> params;
    std::uint64_t seed = 1;
    std::string output;
    std::string bench_dir;
    std::vector<std::string> bench_ops{"interval", "hull", "wtn", "wth"};

    auto with_graph = [&](CLI::App* sub) { sub->add_option("graph", graph_path, "Graph file, or - for stdin")->required(); };
    auto* c_interval = app.add_subcommand("interval", "Weakly toll interval I(S)");
    auto* c_hull = app.add_subcommand("hull", "Weakly toll convex hull H(S)");
    for (auto* sub : {c_interval, c_hull}) {
        with_graph(sub);
        sub->add_option("vertices", vertices, "Members of S")->required();
    }
    auto* c_wtn = app.add_subcommand("wtn", "Weakly toll interval number");
    c_wtn->add_flag("--no-twin-pruning", no_twin_pruning, "Test every candidate set");
    auto* c_wth = app.add_subcommand("wth", "Weakly toll hull number");
    auto* c_wtc = app.add_subcommand("wtc", "Weakly toll convexity number");
    c_wtc->add_option("--cap", wtc_cap, "Largest n for exhaustive search")->capture_default_str();
    auto* c_decompose = app.add_subcommand("decompose", "Clique-separator atoms");
    auto* c_twins = app.add_subcommand("twins", "True-twin classes");
    auto* c_extreme = app.add_subcommand("extreme", "Weakly toll extreme vertices ext(G)");
    for (auto* sub : {c_wtn, c_wth, c_wtc, c_decompose, c_twins, c_extreme}) with_graph(sub);

    auto* c_generate = app.add_subcommand("generate", "Write a graph in edge-list format");
    c_generate->add_option("family", family, "path, cycle, complete, star, bowtie, random-gnp, clique-reduction")
        ->required();
    c_generate->add_option("params", params, "Family parameters");
    c_generate->add_option("--seed", seed, "Seed for random families")->capture_default_str();
    c_generate->add_option("-o,--output", output, "Output file (default stdout)");

    auto* c_bench = app.add_subcommand("bench", "Time interval/hull/wtn/wth over a directory of graphs (CSV)");
    c_bench->add_option("corpus", bench_dir, "Directory of .el / .g6 files")->required();
    c_bench->add_option("--ops", bench_ops, "Subset of interval,hull,wtn,wth")->delimiter(',');
    c_bench->add_option("-o,--output", output, "CSV file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (c_generate->parsed()) {
            std::vector<std::string> comments;
            auto g = generate(family, params, seed, comments, opts);
            if (output.empty()) {
                write_edge_list(out, g, comments);
            } else {
                std::ofstream f(output);
                if (!f) throw ArgumentError("cannot write '" + output + "'");
                write_edge_list(f, g, comments);
            }
            return kOk;
        }
        if (c_bench->parsed()) {
            if (output.empty()) return bench(bench_dir, bench_ops, opts, out, err);
            std::ofstream f(output);
            if (!f) throw ArgumentError("cannot write '" + output + "'");
            return bench(bench_dir, bench_ops, opts, f, err);
        }

        const auto g = load(graph_path, opts);
        double ms = 0;
        json result;
        std::string command;
        if (c_interval->parsed() || c_hull->parsed()) {
            command = c_interval->parsed() ? "interval" : "hull";
            const auto s = vertex_set(g, vertices);
            const auto r = timed([&] { return c_interval->parsed() ? interval(g, s) : hull(g, s); }, ms);
            result = {{"set", to_json(r)}, {"size", r.size()}};
        } else if (c_wtn->parsed()) {
            command = "wtn";
            result = to_json(timed([&] { return wtn(g, WtnOptions{!no_twin_pruning}); }, ms));
        } else if (c_wth->parsed()) {
            command = "wth";
            result = to_json(timed([&] { return wth(g); }, ms));
        } else if (c_wtc->parsed()) {
            command = "wtc";
            result = to_json(timed([&] { return wtc_exact(g, wtc_cap); }, ms));
        } else if (c_decompose->parsed()) {
            command = "decompose";
            result = to_json(timed([&] { return decompose(g); }, ms));
        } else if (c_twins->parsed()) {
            command = "twins";
            const auto p = timed([&] { return twin_classes(g); }, ms);
            json classes = json::array();
            for (const auto& c : p.classes) classes.push_back(to_json(c));
            result = {{"class_count", p.classes.size()}, {"classes", classes}};
        } else if (c_extreme->parsed()) {
            command = "extreme";
            result = {{"extreme", to_json(timed([&] { return extreme_vertices(g); }, ms))}};
        }
        emit(out, opts, command, g, std::move(result), ms);
        return kOk;
    } catch (const DisconnectedError& e) {
        err << "error: " << e.what() << '\n';
        return kDisconnected;
    } catch (const RefusalError& e) {
        err << "error: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}

} // namespace wtoll::cli
