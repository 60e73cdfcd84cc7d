#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mostar/errors.hpp"
#include "mostar/index.hpp"
#include "mostar/stats.hpp"
#include "mostar/tree.hpp"

namespace mostar {

struct TransformOutcome {
    Tree before;
    Tree after;
    std::uint64_t mo_before = 0;
    std::uint64_t mo_after = 0;
    bool hypothesis_held = true;
};

inline TransformOutcome make_outcome(Tree before, Tree after, bool hypothesis_held = true) {
    const auto mb = mostar_index(before);
    const auto ma = mostar_index(after);
    return {std::move(before), std::move(after), mb, ma, hypothesis_held};
}

namespace detail {

/// Same vertex set with each (old, new) pair of edges swapped.
inline Tree rewire(const Tree& t, std::span<const std::pair<Edge, Edge>> moves) {
    std::vector<Edge> edges(t.edges().begin(), t.edges().end());
    for (const auto& [old_edge, new_edge] : moves) {
        const auto idx = t.edge_index(old_edge.u, old_edge.v);
        if (!idx)
            throw StructuralError("edge " + std::to_string(old_edge.u) + " " + std::to_string(old_edge.v) +
                                  " not in tree");
        edges[*idx] = new_edge;
    }
    return Tree(t.order(), std::move(edges));
}

inline std::string vname(Vertex v) { return std::to_string(v); }

inline void require_vertex(const Tree& t, Vertex v) {
    if (v >= t.order())
        throw StructuralError("vertex " + vname(v) + " out of range");
}

} // namespace detail

/// G/e: merge the endpoints of a non-pendent edge into u and re-hang v as a
/// leaf of u. The order is unchanged and the Mostar index strictly grows.
inline Tree contract_with_pendant(const Tree& t, Vertex u, Vertex v) {
    if (!t.has_edge(u, v))
        throw StructuralError("no edge " + detail::vname(u) + " " + detail::vname(v));
    if (t.degree(u) == 1 || t.degree(v) == 1)
        throw HypothesisError("contraction needs a non-pendent edge");
    std::vector<Edge> edges;
    edges.reserve(t.size());
    for (const Edge& e : t.edges()) {
        if (e.u == v && e.v != u)
            edges.push_back({u, e.v});
        else if (e.v == v && e.u != u)
            edges.push_back({e.u, u});
        else
            edges.push_back(e);
    }
    return Tree(t.order(), std::move(edges));
}

/// A branch at some vertex that is a bare path ending in a leaf.
struct PendentLeg {
    Vertex head;        // neighbor of the anchor on the leg
    Vertex tip;         // the leaf
    Vertex before_tip;  // tip's neighbor (the anchor when length == 1)
    std::size_t length; // edges from anchor to tip
};

/// Every pendent path hanging at u (empty when u is itself a leaf).
inline std::vector<PendentLeg> pendent_legs(const Tree& t, Vertex u) {
    detail::require_vertex(t, u);
    std::vector<PendentLeg> legs;
    if (t.degree(u) < 2)
        return legs;
    for (Vertex head : t.neighbors(u)) {
        Vertex prev = u;
        Vertex cur = head;
        std::size_t length = 1;
        while (t.degree(cur) == 2) {
            const auto nb = t.neighbors(cur);
            const Vertex next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
            ++length;
        }
        if (t.degree(cur) == 1)
            legs.push_back({head, cur, prev, length});
    }
    return legs;
}

/// G_{u;l,m} -> G_{u;l+1,m-1}: the far vertex of the length-m leg moves to
/// the far end of the length-l leg. Requires l >= m >= 1 and u to carry
/// structure beyond the two legs.
inline Tree rebalance_paths(const Tree& g, Vertex u, std::size_t l, std::size_t m) {
    if (m < 1 || l < m)
        throw HypothesisError("rebalancing needs l >= m >= 1");
    detail::require_vertex(g, u);
    if (g.degree(u) < 3)
        throw HypothesisError("vertex " + detail::vname(u) + " carries nothing besides the two legs");
    const auto legs = pendent_legs(g, u);
    const PendentLeg* longer = nullptr;
    const PendentLeg* shorter = nullptr;
    for (const auto& leg : legs)
        if (leg.length == l) {
            longer = &leg;
            break;
        }
    for (const auto& leg : legs)
        if (leg.length == m && &leg != longer) {
            shorter = &leg;
            break;
        }
    if (!longer || !shorter)
        throw StructuralError("no pendent paths of lengths " + std::to_string(l) + " and " +
                              std::to_string(m) + " at vertex " + detail::vname(u));
    const std::pair<Edge, Edge> move{Edge{shorter->before_tip, shorter->tip}, Edge{longer->tip, shorter->tip}};
    return detail::rewire(g, std::span(&move, 1));
}

/// Pendent leaves of x, excluding its neighbor toward `toward`.
inline std::vector<Vertex> pendant_leaves(const Tree& t, Vertex x, Vertex toward) {
    std::vector<Vertex> leaves;
    for (Vertex w : t.neighbors(x))
        if (w != toward && t.degree(w) == 1)
            leaves.push_back(w);
    return leaves;
}

/// T' moves all pendent leaves of x to x's neighbor on the x-y path; T''
/// does the same for y. At least one of them has a larger Mostar index.
inline std::pair<Tree, Tree> move_pendants_to_path_neighbor(const Tree& t, Vertex x, Vertex y) {
    detail::require_vertex(t, x);
    detail::require_vertex(t, y);
    if (x == y)
        throw HypothesisError("x and y must differ");
    const auto path = tree_path(t, x, y);
    const Vertex x_next = path[1];
    const Vertex y_next = path[path.size() - 2];
    const auto xs = pendant_leaves(t, x, x_next);
    const auto ys = pendant_leaves(t, y, y_next);
    if (xs.empty() || ys.empty())
        throw HypothesisError("x and y must both carry pendent leaves");

    auto shift = [&](Vertex from, Vertex to, const std::vector<Vertex>& leaves) {
        std::vector<std::pair<Edge, Edge>> moves;
        for (Vertex w : leaves)
            moves.push_back({Edge{from, w}, Edge{to, w}});
        return detail::rewire(t, moves);
    };
    return {shift(x, x_next, xs), shift(y, y_next, ys)};
}

/// Orders of the two components of T - v_i that contain v_0 and v_r.
struct PathSides {
    std::size_t toward_start = 0;
    std::size_t toward_end = 0;
};

inline PathSides path_sides(const Tree& t, std::span<const Vertex> path, std::size_t i) {
    return {side_order(t, path[i - 1], path[i]), side_order(t, path[i + 1], path[i])};
}

/// Re-hangs the first c off-path neighbors of v_i (with their subtrees) at v_0.
///
/// `path` must be a longest path v_0..v_r. The hypothesis compares the
/// sides of v_i along the path: with a = |side containing v_0| and
/// b = |side containing v_r|, it holds when b >= a + 1. For a bare run
/// v_0..v_{i-1} this is n_r >= n_0 + d(v_i, v_0). Under it the index
/// strictly decreases. The surgery is performed either way.
inline TransformOutcome shift_branch_to_end(const Tree& t, std::span<const Vertex> path, std::size_t i,
                                            std::size_t c) {
    if (path.size() < 3)
        throw StructuralError("path must have at least three vertices");
    for (Vertex v : path)
        detail::require_vertex(t, v);
    for (std::size_t j = 0; j + 1 < path.size(); ++j)
        if (!t.has_edge(path[j], path[j + 1]))
            throw StructuralError("consecutive path vertices " + detail::vname(path[j]) + ", " +
                                  detail::vname(path[j + 1]) + " are not adjacent");
    std::vector<Vertex> sorted(path.begin(), path.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw StructuralError("path repeats a vertex");
    if (path.size() - 1 != diameter(t))
        throw StructuralError("path is not a longest path");
    if (i < 1 || i + 1 >= path.size())
        throw StructuralError("index must satisfy 1 <= i <= r-1");

    const Vertex vi = path[i];
    std::vector<Vertex> off;
    for (Vertex w : t.neighbors(vi))
        if (w != path[i - 1] && w != path[i + 1])
            off.push_back(w);
    std::sort(off.begin(), off.end());
    if (off.empty())
        throw StructuralError("v_i has no neighbors off the path");
    if (c < 1 || c > off.size())
        throw HypothesisError("count must satisfy 1 <= c <= number of off-path neighbors");

    std::vector<std::pair<Edge, Edge>> moves;
    for (std::size_t j = 0; j < c; ++j)
        moves.push_back({Edge{vi, off[j]}, Edge{path[0], off[j]}});
    const auto sides = path_sides(t, path, i);
    const bool held = sides.toward_end >= sides.toward_start + 1;
    return make_outcome(t, detail::rewire(t, moves), held);
}

/// Moves the pendent path that starts at `head` from `from` to `to`.
/// With a leaf as `head` this is the single pendant move.
inline Tree relocate_pendant(const Tree& t, Vertex head, Vertex from, Vertex to) {
    detail::require_vertex(t, head);
    detail::require_vertex(t, from);
    detail::require_vertex(t, to);
    if (!t.has_edge(from, head))
        throw StructuralError(detail::vname(head) + " is not attached at " + detail::vname(from));
    if (to == from)
        throw HypothesisError("target must differ from the current anchor");
    if (t.degree(from) < 2)
        throw HypothesisError("anchor must not be a leaf");
    std::vector<Vertex> branch;
    Vertex prev = from;
    Vertex cur = head;
    branch.push_back(cur);
    while (t.degree(cur) == 2) {
        const auto nb = t.neighbors(cur);
        const Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
        branch.push_back(cur);
    }
    if (t.degree(cur) != 1)
        throw HypothesisError("branch at " + detail::vname(head) + " is not a pendent path");
    if (std::find(branch.begin(), branch.end(), to) != branch.end())
        throw HypothesisError("target lies on the moved path");
    const std::pair<Edge, Edge> move{Edge{from, head}, Edge{to, head}};
    return detail::rewire(t, std::span(&move, 1));
}

} // namespace mostar
