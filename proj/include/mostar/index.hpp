#pragma once

#include <cstdint>
#include <vector>

#include "mostar/errors.hpp"
#include "mostar/tree.hpp"

namespace mostar {

/// Per-edge split: n_u vertices strictly closer to u, n_v strictly closer to v.
struct EdgeSplit {
    Edge edge;
    std::uint32_t n_u = 0;
    std::uint32_t n_v = 0;
    std::uint32_t psi = 0;

    friend bool operator==(const EdgeSplit&, const EdgeSplit&) = default;
};

struct MostarResult {
    std::uint64_t total = 0;
    std::vector<EdgeSplit> splits; // same order as Tree::edges()

    friend bool operator==(const MostarResult&, const MostarResult&) = default;
};

namespace detail {

inline std::uint32_t abs_diff(std::uint32_t a, std::uint32_t b) { return a > b ? a - b : b - a; }

/// Parent and subtree size of every vertex with the tree rooted at 0.
struct RootedSizes {
    std::vector<Vertex> parent;
    std::vector<std::uint32_t> subtree;
};

inline constexpr Vertex no_parent = static_cast<Vertex>(-1);

inline RootedSizes rooted_sizes(const Tree& t) {
    const std::size_t n = t.order();
    RootedSizes r;
    r.parent.assign(n, no_parent);
    r.subtree.assign(n, 1);
    // `order` doubles as the BFS queue.
    std::vector<Vertex> order;
    order.reserve(n);
    order.push_back(0);
    for (std::size_t head = 0; head < order.size(); ++head) {
        const Vertex x = order[head];
        for (Vertex y : t.neighbors(x)) {
            if (y != r.parent[x]) {
                r.parent[y] = x;
                order.push_back(y);
            }
        }
    }
    for (std::size_t i = order.size(); i-- > 1;) {
        const Vertex x = order[i];
        r.subtree[r.parent[x]] += r.subtree[x];
    }
    return r;
}

} // namespace detail

/// Mostar index in linear time.
///
/// Deleting a tree edge leaves two components and no vertex is equidistant
/// from the endpoints, so n_u is the size of u's component. One subtree-size
/// pass from vertex 0 gives every component size.
inline MostarResult mostar_fast(const Tree& t) {
    MostarResult result;
    if (t.order() == 1)
        return result;
    const auto n = static_cast<std::uint32_t>(t.order());
    const auto rooted = detail::rooted_sizes(t);
    result.splits.reserve(t.size());
    for (const Edge& e : t.edges()) {
        EdgeSplit s{e, 0, 0, 0};
        if (rooted.parent[e.v] == e.u) {
            s.n_v = rooted.subtree[e.v];
            s.n_u = n - s.n_v;
        } else {
            s.n_u = rooted.subtree[e.u];
            s.n_v = n - s.n_u;
        }
        s.psi = detail::abs_diff(s.n_u, s.n_v);
        result.total += s.psi;
        result.splits.push_back(s);
    }
    return result;
}

/// Mostar index only, without materializing splits.
inline std::uint64_t mostar_index(const Tree& t) {
    if (t.order() == 1)
        return 0;
    const auto n = static_cast<std::uint32_t>(t.order());
    const auto rooted = detail::rooted_sizes(t);
    std::uint64_t total = 0;
    for (Vertex x = 1; x < n; ++x)
        total += detail::abs_diff(n - rooted.subtree[x], rooted.subtree[x]);
    return total;
}

namespace detail {

inline std::vector<std::uint32_t> bfs_distances(const Tree& t, Vertex source) {
    constexpr auto unseen = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> dist(t.order(), unseen);
    std::vector<Vertex> queue{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex x = queue[head];
        for (Vertex y : t.neighbors(x)) {
            if (dist[y] == unseen) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

inline EdgeSplit split_by_distances(const Tree& t, Edge e) {
    const auto du = bfs_distances(t, e.u);
    const auto dv = bfs_distances(t, e.v);
    EdgeSplit s{e, 0, 0, 0};
    for (std::size_t w = 0; w < t.order(); ++w) {
        if (du[w] < dv[w])
            ++s.n_u;
        else if (dv[w] < du[w])
            ++s.n_v;
    }
    s.psi = abs_diff(s.n_u, s.n_v);
    return s;
}

} // namespace detail

/// Definitional Mostar index: two BFS sweeps per edge, counting strictly
/// closer vertices. Quadratic; used as the reference for mostar_fast.
inline MostarResult mostar_bfs(const Tree& t) {
    MostarResult result;
    result.splits.reserve(t.size());
    for (const Edge& e : t.edges()) {
        auto s = detail::split_by_distances(t, e);
        result.total += s.psi;
        result.splits.push_back(s);
    }
    return result;
}

/// Split of the single edge {u,v}, oriented as given.
inline EdgeSplit psi_edge(const Tree& t, Vertex u, Vertex v) {
    if (!t.has_edge(u, v))
        throw TreeError("no edge " + std::to_string(u) + " " + std::to_string(v) + " in tree");
    EdgeSplit s{Edge{u, v}, 0, 0, 0};
    s.n_u = static_cast<std::uint32_t>(side_order(t, u, v));
    s.n_v = static_cast<std::uint32_t>(t.order()) - s.n_u;
    s.psi = detail::abs_diff(s.n_u, s.n_v);
    return s;
}

} // namespace mostar
