#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mostar/constraints.hpp"
#include "mostar/errors.hpp"
#include "mostar/tree.hpp"

namespace mostar {

struct PathSpec { int n = 1; };
struct StarSpec { int n = 2; };
/// r pendent paths of almost equal length at a common center.
struct SpiderSpec { int n = 3; int r = 2; };
/// Caterpillar with given spine degrees; the order follows from them.
struct CaterpillarSpec { std::vector<int> spine_degrees; };
/// Path v1..v_{n-a-b} with pendants at v2..v_{a+1} and v_{n-a-2b}..v_{n-a-b-1}.
struct CSpec { int n = 2; int a = 0; int b = 0; };
/// Path v1..v_{n-a-b-2} with an extra pendant at v2, then a+1 and b pendants as in C.
struct FSpec { int n = 5; int a = 0; int b = 0; };
/// k legs of length r plus n-kr-1 pendent edges at one center.
struct SrkSpec { int n = 4; int k = 1; int r = 2; };
/// Path with a legs of length r at one end and b at the other.
struct ASpec { int n = 3; int r = 1; int a = 1; int b = 0; };

using FamilySpec =
    std::variant<PathSpec, StarSpec, SpiderSpec, CaterpillarSpec, CSpec, FSpec, SrkSpec, ASpec>;

namespace detail {

class TreeBuilder {
public:
    Vertex add() { return static_cast<Vertex>(n_++); }

    Vertex attach(Vertex to) {
        const Vertex v = add();
        edges_.push_back({to, v});
        return v;
    }

    /// Hangs a path of `length` new vertices from `to`; returns the far end.
    Vertex attach_path(Vertex to, int length) {
        Vertex last = to;
        for (int i = 0; i < length; ++i)
            last = attach(last);
        return last;
    }

    /// Path of `length` new vertices; returns the first id.
    Vertex add_path(int length) {
        const Vertex first = add();
        for (int i = 1; i < length; ++i)
            edges_.push_back({first + Vertex(i) - 1, add()});
        return first;
    }

    Tree finish() && { return Tree(n_, std::move(edges_)); }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

[[noreturn]] inline void param_fail(const std::string& family, const std::string& why) {
    throw ParameterError(family + ": " + why);
}

inline Tree build_path(int n) {
    if (n < 1)
        param_fail("path", "requires n >= 1");
    TreeBuilder b;
    b.add_path(n);
    return std::move(b).finish();
}

inline Tree build_star(int n) {
    if (n < 2)
        param_fail("star", "requires n >= 2");
    TreeBuilder b;
    const Vertex c = b.add();
    for (int i = 1; i < n; ++i)
        b.attach(c);
    return std::move(b).finish();
}

inline Tree build_spider(int n, int r) {
    if (r < 2 || r > n - 1)
        param_fail("spider", "requires 2 <= r <= n-1");
    const int q = (n - 1) / r;
    const int longer = n - 1 - r * q;
    TreeBuilder b;
    const Vertex c = b.add();
    for (int leg = 0; leg < r; ++leg)
        b.attach_path(c, leg < longer ? q + 1 : q);
    return std::move(b).finish();
}

inline Tree build_caterpillar(const std::vector<int>& d) {
    const int z = static_cast<int>(d.size());
    if (z < 2)
        param_fail("cat", "requires at least two spine vertices");
    for (int x : d)
        if (x < 2)
            param_fail("cat", "spine degrees must be >= 2");
    TreeBuilder b;
    const Vertex first = b.add_path(z);
    for (int j = 0; j < z; ++j) {
        const int pendants = (j == 0 || j == z - 1) ? d[j] - 1 : d[j] - 2;
        for (int p = 0; p < pendants; ++p)
            b.attach(first + Vertex(j));
    }
    return std::move(b).finish();
}

inline Tree build_c(int n, int a, int b) {
    if (a < 0 || b < 0)
        param_fail("C", "requires a, b >= 0");
    if (2 * (a + b) > n - 1)
        param_fail("C", "requires 2(a+b) <= n-1");
    // Attachment windows 2..a+1 and n-a-2b..n-a-b-1 must be disjoint and
    // stay off the path ends.
    if (a + 1 >= n - a - 2 * b)
        param_fail("C", "requires a+1 < n-a-2b (attachment windows overlap)");
    const int m = n - a - b;
    TreeBuilder tb;
    tb.add_path(m);
    for (int i = 2; i <= a + 1; ++i)
        tb.attach(Vertex(i - 1));
    for (int i = n - a - 2 * b; i <= n - a - b - 1; ++i)
        tb.attach(Vertex(i - 1));
    return std::move(tb).finish();
}

inline Tree build_f(int n, int a, int b) {
    if (a < 0 || b < 0)
        param_fail("F", "requires a, b >= 0");
    if (2 * (a + b) > n - 5)
        param_fail("F", "requires 2(a+b) <= n-5");
    const int m = n - a - b - 2;
    if (a + 2 > m - 1 || (b > 0 && a + 2 >= n - a - 2 * b - 2))
        param_fail("F", "attachment windows overlap");
    TreeBuilder tb;
    tb.add_path(m);
    tb.attach(Vertex(1));
    for (int i = 2; i <= a + 2; ++i)
        tb.attach(Vertex(i - 1));
    for (int i = n - a - 2 * b - 2; i <= n - a - b - 3; ++i)
        tb.attach(Vertex(i - 1));
    return std::move(tb).finish();
}

inline Tree build_srk(int n, int k, int r) {
    const bool single = k == 1 && r >= 2 && r <= n - 3;
    const bool multi = k >= 2 && r >= 2 && k * r <= n - 2;
    if (!single && !multi)
        param_fail("srk", "requires k = 1 and 2 <= r <= n-3, or k >= 2, r >= 2 and kr <= n-2");
    TreeBuilder tb;
    const Vertex c = tb.add();
    for (int i = 0; i < k; ++i)
        tb.attach_path(c, r);
    for (int i = 0; i < n - k * r - 1; ++i)
        tb.attach(c);
    return std::move(tb).finish();
}

inline Tree build_a(int n, int r, int a, int b) {
    if (r < 1)
        param_fail("A", "requires r >= 1");
    if (a < 1 || b < 0 || a < b)
        param_fail("A", "requires a >= b >= 0 and a >= 1");
    if ((a + b) * r > n - 2)
        param_fail("A", "requires (a+b)r <= n-2");
    // The spine takes whatever the legs leave, so the tree has exactly n vertices.
    const int m = n - (a + b) * r;
    TreeBuilder tb;
    tb.add_path(m);
    for (int i = 0; i < a; ++i)
        tb.attach_path(Vertex(0), r);
    for (int i = 0; i < b; ++i)
        tb.attach_path(Vertex(m - 1), r);
    return std::move(tb).finish();
}

} // namespace detail

inline Tree build(const FamilySpec& spec) {
    return std::visit(overloaded{
                          [](const PathSpec& s) { return detail::build_path(s.n); },
                          [](const StarSpec& s) { return detail::build_star(s.n); },
                          [](const SpiderSpec& s) { return detail::build_spider(s.n, s.r); },
                          [](const CaterpillarSpec& s) { return detail::build_caterpillar(s.spine_degrees); },
                          [](const CSpec& s) { return detail::build_c(s.n, s.a, s.b); },
                          [](const FSpec& s) { return detail::build_f(s.n, s.a, s.b); },
                          [](const SrkSpec& s) { return detail::build_srk(s.n, s.k, s.r); },
                          [](const ASpec& s) { return detail::build_a(s.n, s.r, s.a, s.b); },
                      },
                      spec);
}

inline std::string to_string(const FamilySpec& spec) {
    using std::to_string;
    return std::visit(
        overloaded{
            [](const PathSpec& s) { return "path:n=" + to_string(s.n); },
            [](const StarSpec& s) { return "star:n=" + to_string(s.n); },
            [](const SpiderSpec& s) { return "spider:n=" + to_string(s.n) + ",r=" + to_string(s.r); },
            [](const CaterpillarSpec& s) {
                std::string out = "cat:d=";
                for (std::size_t i = 0; i < s.spine_degrees.size(); ++i)
                    out += (i ? "," : "") + to_string(s.spine_degrees[i]);
                return out;
            },
            [](const CSpec& s) {
                return "C:n=" + to_string(s.n) + ",a=" + to_string(s.a) + ",b=" + to_string(s.b);
            },
            [](const FSpec& s) {
                return "F:n=" + to_string(s.n) + ",a=" + to_string(s.a) + ",b=" + to_string(s.b);
            },
            [](const SrkSpec& s) {
                return "srk:n=" + to_string(s.n) + ",k=" + to_string(s.k) + ",r=" + to_string(s.r);
            },
            [](const ASpec& s) {
                return "A:n=" + to_string(s.n) + ",r=" + to_string(s.r) + ",a=" + to_string(s.a) +
                       ",b=" + to_string(s.b);
            },
        },
        spec);
}

/// Parses `kind:key=value,...`; list-valued keys continue over bare items (`cat:d=4,3,2`).
inline FamilySpec parse_family(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw ParameterError("family spec '" + std::string(text) + "' needs 'kind:params'");
    std::string kind(text.substr(0, colon));
    for (auto& ch : kind)
        ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));

    std::map<std::string, std::vector<int>, std::less<>> params;
    std::string current;
    const auto body = text.substr(colon + 1);
    std::size_t start = 0;
    while (start <= body.size() && !body.empty()) {
        const auto comma = body.find(',', start);
        const auto item = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        const auto eq = item.find('=');
        if (eq != std::string_view::npos) {
            current = std::string(item.substr(0, eq));
            if (params.count(current))
                throw ParameterError("duplicate parameter '" + current + "'");
            params[current].push_back(detail::parse_int(item.substr(eq + 1), text));
        } else {
            if (current.empty())
                throw ParameterError("value without key in '" + std::string(text) + "'");
            params[current].push_back(detail::parse_int(item, text));
        }
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }

    auto take = [&](std::string_view key) {
        auto it = params.find(key);
        if (it == params.end())
            throw ParameterError(kind + ": missing parameter '" + std::string(key) + "'");
        if (it->second.size() != 1)
            throw ParameterError(kind + ": parameter '" + std::string(key) + "' takes one value");
        const int v = it->second.front();
        params.erase(it);
        return v;
    };
    auto done = [&](FamilySpec spec) {
        if (!params.empty())
            throw ParameterError(kind + ": unknown parameter '" + params.begin()->first + "'");
        return spec;
    };

    if (kind == "path")
        return done(PathSpec{take("n")});
    if (kind == "star")
        return done(StarSpec{take("n")});
    if (kind == "spider") {
        const int n = take("n");
        return done(SpiderSpec{n, take("r")});
    }
    if (kind == "cat") {
        auto it = params.find("d");
        if (it == params.end())
            throw ParameterError("cat: missing parameter 'd'");
        CaterpillarSpec spec{it->second};
        params.erase(it);
        return done(spec);
    }
    if (kind == "c" || kind == "f") {
        const int n = take("n");
        const int a = take("a");
        const int b = take("b");
        return kind == "c" ? done(CSpec{n, a, b}) : done(FSpec{n, a, b});
    }
    if (kind == "srk") {
        const int n = take("n");
        const int k = take("k");
        return done(SrkSpec{n, k, take("r")});
    }
    if (kind == "a") {
        const int n = take("n");
        const int r = take("r");
        const int a = take("a");
        return done(ASpec{n, r, a, take("b")});
    }
    throw ParameterError("unknown family kind '" + kind + "'");
}

namespace detail {

inline int ceil_div(int x, int d) { return x >= 0 ? (x + d - 1) / d : -((-x) / d); }
inline int floor_div(int x, int d) { return x >= 0 ? x / d : -((-x + d - 1) / d); }

/// Minimizer over trees with t vertices of degree two, 0 <= t <= n-4.
inline FamilySpec degree_two_minimizer(int n, int t) {
    const int rest = n - t;
    if (rest == 5)
        return FSpec{n, 0, 0};
    if (rest % 2 == 1)
        return FSpec{n, ceil_div(rest - 5, 4) - 1, floor_div(rest - 5, 4) + 1};
    // ceil/floor of (n-t)/4 - 1/2 = (n-t-2)/4
    return CSpec{n, ceil_div(rest - 2, 4), floor_div(rest - 2, 4)};
}

} // namespace detail

/// The family claimed to be extremal for the class, instantiated at order n.
///
/// Returns nullopt when no claim covers the (class, direction) pair or the
/// parameters fall outside the claim's stated range.
inline std::optional<FamilySpec> claimed_extremal(int n, const ConstraintSpec& c, Direction dir) {
    using R = std::optional<FamilySpec>;
    const bool max = dir == Direction::max;
    return std::visit(
        overloaded{
            [&](const Unconstrained&) -> R {
                if (max)
                    return n >= 2 ? R{StarSpec{n}} : R{};
                return n >= 1 ? R{PathSpec{n}} : R{};
            },
            [&](const LeafCount& x) -> R {
                if (!max || x.r < 2 || x.r > n - 1)
                    return {};
                return SpiderSpec{n, x.r};
            },
            [&](const OddCount& x) -> R {
                if (x.k < 1 || x.k > n / 2)
                    return {};
                if (max)
                    return 2 * x.k == n ? R{StarSpec{n}} : R{SpiderSpec{n, 2 * x.k}};
                const int k1 = x.k - 1;
                return CSpec{n, detail::ceil_div(k1, 2), detail::floor_div(k1, 2)};
            },
            [&](const AllOdd&) -> R {
                if (n < 2 || n % 2 != 0)
                    return {};
                if (max)
                    return StarSpec{n};
                return CSpec{n, 0, n / 2 - 1};
            },
            [&](const BranchCount& x) -> R {
                if (max || x.k < 0 || 2 * x.k + 2 > n)
                    return {};
                return CSpec{n, detail::ceil_div(x.k, 2), detail::floor_div(x.k, 2)};
            },
            [&](const Deg2Count& x) -> R {
                if (x.t == n - 2 && n >= 2)
                    return PathSpec{n};
                if (x.t < 0 || x.t > n - 4)
                    return {};
                if (max)
                    return SpiderSpec{n, n - x.t - 1};
                return detail::degree_two_minimizer(n, x.t);
            },
            [&](const SeriesReduced&) -> R {
                // Degree-two minimizer at t = 0; the closed form for odd n
                // coincides with it from n = 7 on and n = 5 gives F(5,0,0).
                if (max || n < 5)
                    return {};
                return detail::degree_two_minimizer(n, 0);
            },
            [&](const PendentPathCount& x) -> R {
                const int k = x.k;
                const int r = x.r;
                if (max) {
                    const bool single = k == 1 && r >= 2 && r <= n - 3;
                    const bool multi = k >= 2 && r >= 2 && k * r <= n - 2;
                    if (!single && !multi)
                        return {};
                    return SrkSpec{n, k, r};
                }
                if (k == 1) {
                    if (r < 2 || r > n - 3)
                        return {};
                    // A^1_{n,1,2}, written with the larger group first.
                    return ASpec{n, 1, 2, 1};
                }
                if (k == 2) {
                    if (r < 1 || r > n - 2)
                        return {};
                    return PathSpec{n};
                }
                if (k >= 3 && r >= 1 && k * r <= n - 2)
                    return ASpec{n, r, detail::ceil_div(k, 2), detail::floor_div(k, 2)};
                return {};
            },
            [&](const DegreeSequence&) -> R { return {}; },
        },
        c);
}

} // namespace mostar
