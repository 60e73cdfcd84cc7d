#pragma once

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mostar/errors.hpp"
#include "mostar/tree.hpp"

namespace mostar {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t')
            ++i;
        if (i > start)
            out.push_back(line.substr(start, i - start));
    }
    return out;
}

inline std::uint64_t parse_uint(std::string_view token, std::size_t line_no) {
    std::uint64_t value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw TreeError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                        std::string(token) + "'");
    return value;
}

} // namespace detail

/// Parses the edge-list format: a line `n`, then n-1 lines `u v`.
inline Tree read_edge_list(std::istream& in) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r')
            throw TreeError("line " + std::to_string(lines.size() + 1) + ": CR line ending");
        lines.push_back(std::move(line));
    }
    while (!lines.empty() && detail::split_ws(lines.back()).empty())
        lines.pop_back();
    if (lines.empty())
        throw TreeError("empty edge list");

    const auto header = detail::split_ws(lines[0]);
    if (header.size() != 1)
        throw TreeError("line 1: expected vertex count");
    const auto n = detail::parse_uint(header[0], 1);
    if (n == 0)
        throw TreeError("line 1: vertex count must be positive");
    if (lines.size() != n)
        throw TreeError("expected " + std::to_string(n - 1) + " edge lines, got " +
                        std::to_string(lines.size() - 1));

    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto tokens = detail::split_ws(lines[i]);
        if (tokens.size() != 2)
            throw TreeError("line " + std::to_string(i + 1) + ": expected 'u v'");
        const auto u = detail::parse_uint(tokens[0], i + 1);
        const auto v = detail::parse_uint(tokens[1], i + 1);
        if (u >= n || v >= n)
            throw TreeError("line " + std::to_string(i + 1) + ": vertex id out of range");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    return Tree(n, std::move(edges));
}

inline Tree parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Tree& t) {
    out << t.order() << '\n';
    for (const Edge& e : t.edges())
        out << e.u << ' ' << e.v << '\n';
}

inline std::string to_edge_list(const Tree& t) {
    std::ostringstream out;
    write_edge_list(out, t);
    return out.str();
}

inline std::string to_dot(const Tree& t, std::string_view name = "T") {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (std::size_t v = 0; v < t.order(); ++v)
        out << "  " << v << ";\n";
    for (const Edge& e : t.edges())
        out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

/// {"n": n, "edges": [[u, v], ...]}
inline nlohmann::json to_json(const Tree& t) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : t.edges())
        edges.push_back({e.u, e.v});
    return {{"n", t.order()}, {"edges", std::move(edges)}};
}

inline Tree tree_from_json(const nlohmann::json& j) {
    try {
        const auto n = j.at("n").get<std::size_t>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw TreeError("edge record must be a pair");
            edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
        }
        return Tree(n, std::move(edges));
    } catch (const nlohmann::json::exception& ex) {
        throw TreeError(std::string("malformed tree record: ") + ex.what());
    }
}

} // namespace mostar
