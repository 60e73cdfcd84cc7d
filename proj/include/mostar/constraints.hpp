#pragma once

#include <algorithm>
#include <charconv>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mostar/errors.hpp"
#include "mostar/stats.hpp"

namespace mostar {

enum class Direction { max, min };

inline std::string_view to_string(Direction d) { return d == Direction::max ? "max" : "min"; }

/// How a tree's pendent paths of length r are counted.
enum class PathReading {
    census,  ///< every leaf with run length >= r contributes one
    maximal, ///< only leaves whose run length is exactly r
};

struct Unconstrained {};
struct OddCount { int k = 1; };           // exactly 2k odd vertices
struct Deg2Count { int t = 0; };          // exactly t vertices of degree 2
struct LeafCount { int r = 2; };          // exactly r pendent vertices
struct PendentPathCount {                 // exactly k pendent paths of length r
    int k = 1;
    int r = 1;
    PathReading reading = PathReading::census;
};
struct BranchCount { int k = 0; };        // exactly k vertices of degree >= 3
struct SeriesReduced {};
struct AllOdd {};
struct DegreeSequence { std::vector<std::size_t> degrees; }; // non-increasing

using ConstraintSpec = std::variant<Unconstrained, OddCount, Deg2Count, LeafCount, PendentPathCount,
                                    BranchCount, SeriesReduced, AllOdd, DegreeSequence>;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

inline bool satisfies(const TreeStats& s, const ConstraintSpec& c) {
    return std::visit(
        overloaded{
            [](const Unconstrained&) { return true; },
            [&](const OddCount& x) { return x.k >= 0 && s.odd_count == 2 * std::size_t(x.k); },
            [&](const Deg2Count& x) { return x.t >= 0 && s.deg2_count == std::size_t(x.t); },
            [&](const LeafCount& x) { return x.r >= 0 && s.leaf_count == std::size_t(x.r); },
            [&](const PendentPathCount& x) {
                if (x.k < 0 || x.r < 1)
                    return false;
                const auto count = x.reading == PathReading::census ? s.pendent_paths(std::size_t(x.r))
                                                                    : s.maximal_pendent_paths(std::size_t(x.r));
                return count == std::size_t(x.k);
            },
            [&](const BranchCount& x) { return x.k >= 0 && s.branch_count == std::size_t(x.k); },
            [&](const SeriesReduced&) { return s.is_series_reduced; },
            [&](const AllOdd&) { return s.odd_count == s.degree_sequence.size(); },
            [&](const DegreeSequence& x) { return s.degree_sequence == x.degrees; },
        },
        c);
}

/// Rejects parameters outside the ranges on which the classes are defined.
inline void validate(std::size_t n, const ConstraintSpec& c) {
    const auto order = static_cast<long>(n);
    std::visit(overloaded{
                   [](const Unconstrained&) {},
                   [&](const OddCount& x) {
                       if (x.k < 1 || x.k > order / 2)
                           throw ParameterError("odd-count class needs 1 <= k <= floor(n/2)");
                   },
                   [&](const Deg2Count& x) {
                       if (x.t < 0 || x.t > order - 2)
                           throw ParameterError("degree-2 class needs 0 <= t <= n-2");
                   },
                   [&](const LeafCount& x) {
                       if (x.r < 1 || x.r > order - 1)
                           throw ParameterError("leaf-count class needs 1 <= r <= n-1");
                   },
                   [&](const PendentPathCount& x) {
                       if (x.k < 0 || x.r < 1)
                           throw ParameterError("pendent-path class needs k >= 0 and r >= 1");
                   },
                   [&](const BranchCount& x) {
                       if (x.k < 0 || 2 * x.k + 2 > order)
                           throw ParameterError("branch-count class needs 0 <= k <= n/2 - 1");
                   },
                   [](const SeriesReduced&) {},
                   [](const AllOdd&) {},
                   [&](const DegreeSequence& x) {
                       if (x.degrees.size() != n)
                           throw ParameterError("degree sequence length must equal n");
                       if (!std::is_sorted(x.degrees.begin(), x.degrees.end(), std::greater<>{}))
                           throw ParameterError("degree sequence must be non-increasing");
                   },
               },
               c);
}

inline std::string to_string(const ConstraintSpec& c) {
    return std::visit(
        overloaded{
            [](const Unconstrained&) -> std::string { return "none"; },
            [](const OddCount& x) { return "odd=" + std::to_string(x.k); },
            [](const Deg2Count& x) { return "deg2=" + std::to_string(x.t); },
            [](const LeafCount& x) { return "leaves=" + std::to_string(x.r); },
            [](const PendentPathCount& x) {
                return std::string(x.reading == PathReading::census ? "ppath=" : "ppath-max=") +
                       std::to_string(x.k) + ":" + std::to_string(x.r);
            },
            [](const BranchCount& x) { return "branch=" + std::to_string(x.k); },
            [](const SeriesReduced&) -> std::string { return "series-reduced"; },
            [](const AllOdd&) -> std::string { return "all-odd"; },
            [](const DegreeSequence& x) {
                std::string s = "degseq=";
                for (std::size_t i = 0; i < x.degrees.size(); ++i)
                    s += (i ? "," : "") + std::to_string(x.degrees[i]);
                return s;
            },
        },
        c);
}

namespace detail {

inline int parse_int(std::string_view token, std::string_view what) {
    int value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParameterError("bad integer '" + std::string(token) + "' in " + std::string(what));
    return value;
}

inline std::vector<int> parse_int_list(std::string_view text, char sep, std::string_view what) {
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto pos = text.find(sep, start);
        const auto piece = text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
        out.push_back(parse_int(piece, what));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

} // namespace detail

/// Parses the filter syntax used by the CLI, e.g. `odd=2`, `ppath=3:2`, `series-reduced`.
inline ConstraintSpec parse_constraint(std::string_view text) {
    const auto eq = text.find('=');
    const auto key = text.substr(0, eq);
    const auto value = eq == std::string_view::npos ? std::string_view{} : text.substr(eq + 1);
    const bool has_value = eq != std::string_view::npos;
    auto need = [&](bool want) {
        if (want != has_value)
            throw ParameterError("filter '" + std::string(text) + "' " +
                                 (want ? "needs a value" : "takes no value"));
    };
    if (key == "none") {
        need(false);
        return Unconstrained{};
    }
    if (key == "odd") {
        need(true);
        return OddCount{detail::parse_int(value, text)};
    }
    if (key == "deg2") {
        need(true);
        return Deg2Count{detail::parse_int(value, text)};
    }
    if (key == "leaves") {
        need(true);
        return LeafCount{detail::parse_int(value, text)};
    }
    if (key == "branch") {
        need(true);
        return BranchCount{detail::parse_int(value, text)};
    }
    if (key == "ppath" || key == "ppath-max") {
        need(true);
        const auto parts = detail::parse_int_list(value, ':', text);
        if (parts.size() != 2)
            throw ParameterError("ppath filter expects k:r");
        return PendentPathCount{parts[0], parts[1],
                                key == "ppath" ? PathReading::census : PathReading::maximal};
    }
    if (key == "series-reduced") {
        need(false);
        return SeriesReduced{};
    }
    if (key == "all-odd") {
        need(false);
        return AllOdd{};
    }
    if (key == "degseq") {
        need(true);
        DegreeSequence d;
        for (int x : detail::parse_int_list(value, ',', text)) {
            if (x < 1)
                throw ParameterError("degrees must be positive");
            d.degrees.push_back(std::size_t(x));
        }
        std::sort(d.degrees.begin(), d.degrees.end(), std::greater<>{});
        return d;
    }
    throw ParameterError("unknown filter '" + std::string(text) + "'");
}

} // namespace mostar
