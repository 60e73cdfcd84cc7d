#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "mostar/constraints.hpp"
#include "mostar/errors.hpp"
#include "mostar/stats.hpp"
#include "mostar/tree.hpp"

namespace mostar {

inline constexpr std::size_t default_enumeration_cap = 18;

/// Free trees of order n, one per isomorphism class.
///
/// Walks canonical level sequences in the order of the Wright-Richmond-
/// Odlyzko-McKay generator: start from the path rooted at its center, step
/// through rooted level sequences, and jump over any that do not encode a
/// free tree rooted at its center. The sequence order is deterministic, so
/// an index range of the stream identifies the same trees on every run.
class FreeTreeGenerator {
public:
    explicit FreeTreeGenerator(std::size_t n, std::size_t cap = default_enumeration_cap) : n_(n) {
        if (n == 0)
            throw ResourceError("tree order must be at least 1");
        if (n > cap)
            throw ResourceError("order " + std::to_string(n) + " exceeds enumeration cap " +
                                std::to_string(cap));
        if (n == 1)
            return;
        std::vector<int> layout;
        for (int i = 0; i <= int(n / 2); ++i)
            layout.push_back(i);
        for (int i = 1; i < int((n + 1) / 2); ++i)
            layout.push_back(i);
        candidate_ = std::move(layout);
    }

    std::optional<Tree> next() {
        if (n_ == 1) {
            if (single_done_)
                return std::nullopt;
            single_done_ = true;
            return Tree::trivial();
        }
        if (!candidate_)
            return std::nullopt;
        auto layout = next_free(std::move(*candidate_));
        Tree t = to_tree(layout);
        candidate_ = next_rooted(std::move(layout), std::nullopt);
        return t;
    }

    std::size_t order() const noexcept { return n_; }

    /// Tree encoded by a level sequence (vertex i at depth layout[i]).
    static Tree to_tree(std::span<const int> layout) {
        std::vector<Edge> edges;
        edges.reserve(layout.size() - 1);
        std::vector<std::size_t> stack;
        for (std::size_t i = 0; i < layout.size(); ++i) {
            if (!stack.empty()) {
                while (layout[stack.back()] >= layout[i])
                    stack.pop_back();
                edges.push_back({Vertex(stack.back()), Vertex(i)});
            }
            stack.push_back(i);
        }
        return Tree(layout.size(), std::move(edges));
    }

private:
    static std::optional<std::vector<int>> next_rooted(std::vector<int> seq, std::optional<std::size_t> from) {
        std::size_t p;
        if (from) {
            p = *from;
        } else {
            p = seq.size() - 1;
            while (seq[p] == 1)
                --p;
        }
        if (p == 0)
            return std::nullopt;
        std::size_t q = p - 1;
        while (seq[q] != seq[p] - 1)
            --q;
        for (std::size_t i = p; i < seq.size(); ++i)
            seq[i] = seq[i - p + q];
        return seq;
    }

    /// Splits at the second vertex of depth 1: the root's first subtree
    /// (depths shifted up by one) and the rest, root included.
    static std::pair<std::vector<int>, std::vector<int>> split(const std::vector<int>& seq) {
        std::size_t m = seq.size();
        bool seen = false;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (seq[i] == 1) {
                if (seen) {
                    m = i;
                    break;
                }
                seen = true;
            }
        }
        std::vector<int> left;
        for (std::size_t i = 1; i < m; ++i)
            left.push_back(seq[i] - 1);
        std::vector<int> rest{0};
        for (std::size_t i = m; i < seq.size(); ++i)
            rest.push_back(seq[i]);
        return {std::move(left), std::move(rest)};
    }

    static std::vector<int> next_free(std::vector<int> candidate) {
        auto [left, rest] = split(candidate);
        const int left_height = *std::max_element(left.begin(), left.end());
        const int rest_height = *std::max_element(rest.begin(), rest.end());
        bool valid = rest_height >= left_height;
        if (valid && rest_height == left_height) {
            if (left.size() > rest.size())
                valid = false;
            else if (left.size() == rest.size() && left > rest)
                valid = false;
        }
        if (valid)
            return candidate;

        const std::size_t p = left.size();
        auto jumped = *next_rooted(candidate, p);
        if (candidate[p] > 2) {
            const auto [new_left, new_rest] = split(jumped);
            const int h = *std::max_element(new_left.begin(), new_left.end());
            // Overwrite the tail with the path 1, 2, ..., h+1.
            const std::size_t len = std::size_t(h) + 1;
            for (std::size_t i = 0; i < len; ++i)
                jumped[jumped.size() - len + i] = int(i) + 1;
        }
        return jumped;
    }

    std::size_t n_;
    bool single_done_ = false;
    std::optional<std::vector<int>> candidate_;
};

/// Calls fn(tree, index) for each free tree of order n with index in [begin, end).
template <class Fn>
void for_each_free_tree(std::size_t n, Fn&& fn, std::size_t begin = 0,
                        std::size_t end = static_cast<std::size_t>(-1),
                        std::size_t cap = default_enumeration_cap) {
    FreeTreeGenerator gen(n, cap);
    std::size_t index = 0;
    while (index < end) {
        auto t = gen.next();
        if (!t)
            break;
        if (index >= begin)
            fn(*t, index);
        ++index;
    }
}

inline std::vector<Tree> all_trees(std::size_t n, std::size_t cap = default_enumeration_cap) {
    std::vector<Tree> out;
    for_each_free_tree(n, [&](const Tree& t, std::size_t) { out.push_back(t); }, 0,
                       static_cast<std::size_t>(-1), cap);
    return out;
}

/// Free trees of order n in the class described by the constraint.
inline std::vector<Tree> trees_satisfying(std::size_t n, const ConstraintSpec& c,
                                          std::size_t cap = default_enumeration_cap) {
    validate(n, c);
    std::vector<Tree> out;
    for_each_free_tree(
        n,
        [&](const Tree& t, std::size_t) {
            if (n >= 2 && satisfies(stats(t), c))
                out.push_back(t);
            else if (n == 1 && std::holds_alternative<Unconstrained>(c))
                out.push_back(t);
        },
        0, static_cast<std::size_t>(-1), cap);
    return out;
}

/// Decodes a Pruefer sequence of length n-2 over 0..n-1 in linear time.
inline Tree tree_from_prufer(std::size_t n, std::span<const Vertex> code) {
    if (n < 2 || code.size() != n - 2)
        throw TreeError("Pruefer sequence must have length n-2 with n >= 2");
    std::vector<std::size_t> degree(n, 1);
    for (Vertex x : code) {
        if (x >= n)
            throw TreeError("Pruefer entry out of range");
        ++degree[x];
    }
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    std::size_t ptr = 0;
    while (degree[ptr] != 1)
        ++ptr;
    std::size_t leaf = ptr;
    for (Vertex x : code) {
        edges.push_back({Vertex(leaf), x});
        if (--degree[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (degree[ptr] != 1)
                ++ptr;
            leaf = ptr;
        }
    }
    edges.push_back({Vertex(leaf), Vertex(n - 1)});
    return Tree(n, std::move(edges));
}

/// Uniform random labeled tree; deterministic for a fixed seed.
inline Tree random_tree(std::size_t n, std::uint64_t seed) {
    if (n < 2)
        throw TreeError("random_tree needs n >= 2");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Vertex> pick(0, Vertex(n - 1));
    std::vector<Vertex> code(n - 2);
    for (auto& x : code)
        x = pick(rng);
    return tree_from_prufer(n, code);
}

} // namespace mostar
