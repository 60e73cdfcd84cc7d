#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "mostar/tree.hpp"

namespace mostar {

/// The one or two central vertices, found by peeling leaves.
inline std::vector<Vertex> centers(const Tree& t) {
    const std::size_t n = t.order();
    if (n <= 2) {
        std::vector<Vertex> all(n);
        for (std::size_t i = 0; i < n; ++i)
            all[i] = static_cast<Vertex>(i);
        return all;
    }
    std::vector<std::size_t> remaining(n);
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v) {
        remaining[v] = t.degree(v);
        if (remaining[v] == 1)
            layer.push_back(v);
    }
    std::size_t left = n;
    while (left > 2) {
        left -= layer.size();
        std::vector<Vertex> next;
        for (Vertex leaf : layer)
            for (Vertex w : t.neighbors(leaf))
                if (--remaining[w] == 1)
                    next.push_back(w);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

/// AHU parenthesis code of t rooted at `root`, children in sorted order.
inline std::string rooted_code(const Tree& t, Vertex root) {
    const std::size_t n = t.order();
    constexpr Vertex none = static_cast<Vertex>(-1);
    std::vector<Vertex> parent(n, none);
    std::vector<Vertex> order{root};
    order.reserve(n);
    for (std::size_t head = 0; head < order.size(); ++head) {
        const Vertex x = order[head];
        for (Vertex y : t.neighbors(x))
            if (y != parent[x]) {
                parent[y] = x;
                order.push_back(y);
            }
    }
    std::vector<std::vector<std::string>> pending(n);
    for (std::size_t i = order.size(); i-- > 0;) {
        const Vertex x = order[i];
        auto& kids = pending[x];
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (auto& k : kids)
            s += k;
        s += ')';
        kids.clear();
        kids.shrink_to_fit();
        if (x == root)
            return s;
        pending[parent[x]].push_back(std::move(s));
    }
    return {};
}

/// Canonical code: equal exactly for isomorphic trees.
inline std::string canonical_form(const Tree& t) {
    const auto c = centers(t);
    std::string best = rooted_code(t, c[0]);
    if (c.size() == 2)
        best = std::min(best, rooted_code(t, c[1]));
    return best;
}

inline bool is_isomorphic(const Tree& a, const Tree& b) {
    return a.order() == b.order() && canonical_form(a) == canonical_form(b);
}

} // namespace mostar
