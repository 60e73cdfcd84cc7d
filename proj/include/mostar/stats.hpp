#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "mostar/errors.hpp"
#include "mostar/index.hpp"
#include "mostar/tree.hpp"

namespace mostar {

/// Structural statistics used as class constraints.
///
/// Pendent paths follow the counting convention where a leaf whose
/// degree-2 run reaches a branch vertex after L edges owns one pendent
/// path of every length 1..L. On a path graph the run from either end is
/// n-2, since the far endpoint of a pendent path only needs degree >= 2.
struct TreeStats {
    std::vector<std::size_t> degree_sequence; // non-increasing
    std::size_t odd_count = 0;
    std::size_t deg2_count = 0;
    std::size_t branch_count = 0;
    std::size_t leaf_count = 0;
    /// run_histogram[L] = number of leaves whose pendant run has length L.
    std::vector<std::size_t> run_histogram;
    /// census[r] = number of pendent paths of length r (index 0 unused).
    std::vector<std::size_t> census;
    bool is_series_reduced = false;
    bool is_caterpillar = false;
    std::size_t diameter = 0;

    std::size_t pendent_paths(std::size_t r) const {
        return r < census.size() ? census[r] : 0;
    }

    /// Leaves whose maximal pendent path has length exactly r.
    std::size_t maximal_pendent_paths(std::size_t r) const {
        return r < run_histogram.size() ? run_histogram[r] : 0;
    }
};

/// Farthest vertex from `source` and the distance to it.
inline std::pair<Vertex, std::size_t> farthest_from(const Tree& t, Vertex source) {
    const auto dist = detail::bfs_distances(t, source);
    const auto it = std::max_element(dist.begin(), dist.end());
    return {static_cast<Vertex>(it - dist.begin()), *it};
}

/// One longest path, found by two sweeps.
inline std::vector<Vertex> longest_path(const Tree& t) {
    const auto [a, da] = farthest_from(t, 0);
    const auto [b, db] = farthest_from(t, a);
    return tree_path(t, a, b);
}

inline std::size_t diameter(const Tree& t) { return farthest_from(t, farthest_from(t, 0).first).second; }

/// Distance from leaf to the nearest vertex of degree >= 3, or n-2 on a path.
inline std::size_t leaf_run_length(const Tree& t, Vertex leaf) {
    Vertex prev = leaf;
    Vertex cur = t.neighbors(leaf)[0];
    std::size_t length = 1;
    while (t.degree(cur) == 2) {
        const auto nb = t.neighbors(cur);
        const Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
        ++length;
    }
    if (t.degree(cur) == 1)
        return t.order() - 2;
    return length;
}

inline TreeStats stats(const Tree& t) {
    const std::size_t n = t.order();
    if (n < 2)
        throw TreeError("stats require at least two vertices");

    TreeStats s;
    s.degree_sequence.reserve(n);
    std::size_t max_internal_neighbors = 0;
    for (Vertex v = 0; v < n; ++v) {
        const std::size_t d = t.degree(v);
        s.degree_sequence.push_back(d);
        if (d % 2 == 1)
            ++s.odd_count;
        if (d == 1)
            ++s.leaf_count;
        else if (d == 2)
            ++s.deg2_count;
        else
            ++s.branch_count;
        if (d >= 2) {
            std::size_t internal = 0;
            for (Vertex w : t.neighbors(v))
                internal += t.degree(w) >= 2 ? 1 : 0;
            max_internal_neighbors = std::max(max_internal_neighbors, internal);
        }
    }
    std::sort(s.degree_sequence.begin(), s.degree_sequence.end(), std::greater<>{});

    s.run_histogram.assign(n, 0);
    for (Vertex v = 0; v < n; ++v)
        if (t.degree(v) == 1)
            ++s.run_histogram[leaf_run_length(t, v)];
    s.census.assign(n, 0);
    for (std::size_t r = n - 1; r >= 1; --r)
        s.census[r] = s.run_histogram[r] + (r + 1 < n ? s.census[r + 1] : 0);

    s.is_series_reduced = s.deg2_count == 0;
    // Removing the leaves of a caterpillar leaves a path.
    s.is_caterpillar = max_internal_neighbors <= 2;
    s.diameter = diameter(t);
    return s;
}

} // namespace mostar
