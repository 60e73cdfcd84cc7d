#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mostar/errors.hpp"

namespace mostar {

using Vertex = std::uint32_t;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable labeled tree on vertices 0..n-1.
///
/// Construction validates the edge list: every id in range, no loops,
/// exactly n-1 edges, and no cycle (which together force connectivity).
/// Adjacency is kept in compressed form so trees with millions of
/// vertices stay cheap to build and traverse.
class Tree {
public:
    Tree(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        if (n_ == 0)
            throw TreeError("tree must have at least one vertex");
        if (n_ > std::size_t{1} << 31)
            throw TreeError("vertex count too large");
        if (edges_.size() != n_ - 1)
            throw TreeError("expected " + std::to_string(n_ - 1) + " edges, got " +
                            std::to_string(edges_.size()));

        std::vector<Vertex> parent(n_);
        std::iota(parent.begin(), parent.end(), Vertex{0});
        auto find = [&parent](Vertex x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };

        offsets_.assign(n_ + 1, 0);
        for (const auto& e : edges_) {
            if (e.u >= n_ || e.v >= n_)
                throw TreeError("vertex id out of range in edge " + std::to_string(e.u) + " " +
                                std::to_string(e.v));
            if (e.u == e.v)
                throw TreeError("self-loop at vertex " + std::to_string(e.u));
            const Vertex ru = find(e.u);
            const Vertex rv = find(e.v);
            if (ru == rv)
                throw TreeError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                                " closes a cycle");
            parent[ru] = rv;
            ++offsets_[e.u + 1];
            ++offsets_[e.v + 1];
        }
        for (std::size_t i = 0; i < n_; ++i)
            offsets_[i + 1] += offsets_[i];

        adjacency_.resize(2 * edges_.size());
        std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
        for (const auto& e : edges_) {
            adjacency_[cursor[e.u]++] = e.v;
            adjacency_[cursor[e.v]++] = e.u;
        }
    }

    /// The one-vertex tree.
    static Tree trivial() { return Tree(1, {}); }

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }

    std::span<const Edge> edges() const noexcept { return edges_; }

    std::span<const Vertex> neighbors(Vertex v) const noexcept {
        return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }

    std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

    bool is_leaf(Vertex v) const noexcept { return degree(v) == 1; }

    bool has_edge(Vertex u, Vertex v) const noexcept {
        if (u >= n_ || v >= n_)
            return false;
        auto nb = neighbors(u);
        return std::find(nb.begin(), nb.end(), v) != nb.end();
    }

    /// Position of edge {u,v} in edges(), in either orientation.
    std::optional<std::size_t> edge_index(Vertex u, Vertex v) const noexcept {
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const auto& e = edges_[i];
            if ((e.u == u && e.v == v) || (e.u == v && e.v == u))
                return i;
        }
        return std::nullopt;
    }

    /// An edge is pendent when one endpoint is a leaf.
    bool is_pendent_edge(Vertex u, Vertex v) const noexcept {
        return has_edge(u, v) && (degree(u) == 1 || degree(v) == 1);
    }

private:
    std::size_t n_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adjacency_;
};

/// Rebuilds a tree from an edge list after a surgery; keeps vertex count.
inline Tree with_edges(std::size_t n, std::vector<Edge> edges) { return Tree(n, std::move(edges)); }

/// Vertices of the unique path from `from` to `to`, both ends included.
inline std::vector<Vertex> tree_path(const Tree& t, Vertex from, Vertex to) {
    const std::size_t n = t.order();
    constexpr Vertex none = static_cast<Vertex>(-1);
    std::vector<Vertex> parent(n, none);
    std::vector<Vertex> queue{from};
    parent[from] = from;
    for (std::size_t head = 0; head < queue.size() && parent[to] == none; ++head) {
        const Vertex x = queue[head];
        for (Vertex y : t.neighbors(x)) {
            if (parent[y] == none) {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    std::vector<Vertex> path{to};
    while (path.back() != from)
        path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

/// Size of the component containing `root` after deleting edge {root, blocked}.
inline std::size_t side_order(const Tree& t, Vertex root, Vertex blocked) {
    std::vector<std::pair<Vertex, Vertex>> stack{{root, blocked}};
    std::size_t count = 0;
    while (!stack.empty()) {
        auto [x, from] = stack.back();
        stack.pop_back();
        ++count;
        for (Vertex y : t.neighbors(x))
            if (y != from)
                stack.emplace_back(y, x);
    }
    return count;
}

} // namespace mostar
