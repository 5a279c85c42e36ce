#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace wtoll {

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

// Reads exactly `count` unsigned integers from a line; nothing else may follow.
inline std::optional<std::vector<std::uint64_t>> read_uints(std::string_view line, std::size_t count) {
    std::istringstream in{std::string(line)};
    std::vector<std::uint64_t> vals;
    std::string tok;
    while (in >> tok) {
        if (tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 18) return std::nullopt;
        vals.push_back(std::stoull(tok));
    }
    if (vals.size() != count) return std::nullopt;
    return vals;
}

} // namespace detail

/// Parses the edge-list format: a header "n m", then m lines "u v".
/// Blank lines and lines whose first non-blank character is '#' are skipped.
inline Graph parse_edge_list(std::istream& in) {
    std::string raw;
    std::size_t lineno = 0;
    std::optional<std::uint64_t> n, m;
    std::vector<Edge> edges;
    while (std::getline(in, raw)) {
        ++lineno;
        auto line = detail::trim(raw);
        if (line.empty() || line.front() == '#') continue;
        auto vals = detail::read_uints(line, 2);
        if (!vals) throw ParseError("expected two non-negative integers, got '" + std::string(line) + "'", lineno);
        if (!n) {
            n = (*vals)[0];
            m = (*vals)[1];
            continue;
        }
        auto u = (*vals)[0], v = (*vals)[1];
        if (u >= *n || v >= *n) throw ParseError("vertex out of range 0.." + std::to_string(*n - 1), lineno);
        if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), lineno);
        if (edges.size() == *m) throw ParseError("more edge lines than the declared " + std::to_string(*m), lineno);
        edges.emplace_back(u, v);
    }
    if (!n) throw ParseError("missing 'n m' header");
    if (edges.size() != *m)
        throw ParseError("declared " + std::to_string(*m) + " edges but found " + std::to_string(edges.size()));
    return Graph(*n, edges);
}

inline Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

/// Writes the edge-list format. Each comment line is emitted as "# <line>" before the header.
inline void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& comments = {}) {
    for (const auto& c : comments) out << "# " << c << '\n';
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const Graph& g, const std::vector<std::string>& comments = {}) {
    std::ostringstream out;
    write_edge_list(out, g, comments);
    return out.str();
}

/// Decodes one graph6 string (an optional ">>graph6<<" prefix is accepted).
inline Graph parse_graph6(std::string_view text) {
    auto s = detail::trim(text);
    constexpr std::string_view header = ">>graph6<<";
    if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
    if (s.empty()) throw ParseError("empty graph6 string");
    for (char c : s)
        if (c < 63 || c > 126) throw ParseError("invalid graph6 character '" + std::string(1, c) + "'");

    std::size_t pos = 0;
    auto take = [&](std::size_t count) {
        if (pos + count > s.size()) throw ParseError("truncated graph6 size field");
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < count; ++i) v = (v << 6) | static_cast<std::uint64_t>(s[pos++] - 63);
        return v;
    };
    std::uint64_t n;
    if (s[0] != 126) {
        n = take(1);
    } else if (s.size() > 1 && s[1] != 126) {
        ++pos;
        n = take(3);
    } else {
        pos += 2;
        n = take(6);
    }
    if (n > (std::uint64_t{1} << 24)) throw ParseError("graph6 order " + std::to_string(n) + " is too large");

    const std::uint64_t bits = n * (n ? n - 1 : 0) / 2;
    const std::uint64_t expected = (bits + 5) / 6;
    if (s.size() - pos != expected)
        throw ParseError("graph6 length mismatch: expected " + std::to_string(expected) + " data bytes for n=" +
                         std::to_string(n) + ", got " + std::to_string(s.size() - pos));

    std::vector<Edge> edges;
    std::uint64_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k) {
            auto byte = static_cast<unsigned>(s[pos + k / 6] - 63);
            if ((byte >> (5 - k % 6)) & 1U) edges.emplace_back(i, j);
        }
    return Graph(n, edges);
}

inline std::string to_graph6(const Graph& g) {
    const std::uint64_t n = g.order();
    std::string out;
    auto put = [&](std::uint64_t v, int chars) {
        for (int i = chars - 1; i >= 0; --i) out.push_back(static_cast<char>(63 + ((v >> (6 * i)) & 63)));
    };
    if (n < 63) {
        put(n, 1);
    } else if (n < 258048) {
        out.push_back(126);
        put(n, 3);
    } else {
        out.append(2, static_cast<char>(126));
        put(n, 6);
    }
    unsigned acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    if (filled) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

/// Every non-blank line of a graph6 stream, decoded in order.
inline std::vector<Graph> read_graph6_all(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::trim(line).empty()) continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    return out;
}

enum class GraphFormat { EdgeList, Graph6 };

/// ".g6" selects graph6; anything else is read as an edge list.
inline GraphFormat format_for_path(std::string_view path) {
    return path.size() >= 3 && path.substr(path.size() - 3) == ".g6" ? GraphFormat::Graph6 : GraphFormat::EdgeList;
}

/// Reads a graph from `path`, or from standard input when path is "-".
/// For graph6 input only the first graph is used.
inline Graph read_graph(const std::string& path, std::optional<GraphFormat> format = std::nullopt) {
    const auto fmt = format.value_or(format_for_path(path));
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) throw ParseError("cannot open '" + path + "'");
        in = &file;
    }
    if (fmt == GraphFormat::EdgeList) return parse_edge_list(*in);
    auto graphs = read_graph6_all(*in);
    if (graphs.empty()) throw ParseError("no graph6 data in '" + path + "'");
    return graphs.front();
}

} // namespace wtoll
