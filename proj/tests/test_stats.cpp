#include <gtest/gtest.h>

#include "mostar/mostar.hpp"
#include "oracles.hpp"

using namespace mostar;

TEST(Stats, PathCensus) {
    for (int n = 3; n <= 20; ++n) {
        const auto s = stats(build(PathSpec{n}));
        for (int r = 1; r <= n - 2; ++r)
            EXPECT_EQ(s.pendent_paths(r), 2u) << "n=" << n << " r=" << r;
        EXPECT_EQ(s.pendent_paths(n - 1), 0u);
        EXPECT_EQ(s.maximal_pendent_paths(n - 2), 2u);
    }
}

TEST(Stats, BroomCensus) {
    for (int n = 5; n <= 20; ++n) {
        const auto s = stats(build(ASpec{n, 1, 2, 1}));
        EXPECT_EQ(s.pendent_paths(1), 3u);
        for (int r = 2; r <= n - 3; ++r)
            EXPECT_EQ(s.pendent_paths(r), 1u) << "n=" << n << " r=" << r;
        EXPECT_EQ(s.pendent_paths(n - 2), 0u);
    }
}

TEST(Stats, Star) {
    const auto s = stats(build(StarSpec{6}));
    EXPECT_EQ(s.degree_sequence, (std::vector<std::size_t>{5, 1, 1, 1, 1, 1}));
    EXPECT_EQ(s.odd_count, 6u);
    EXPECT_EQ(s.deg2_count, 0u);
    EXPECT_EQ(s.branch_count, 1u);
    EXPECT_EQ(s.leaf_count, 5u);
    EXPECT_EQ(s.pendent_paths(1), 5u);
    EXPECT_EQ(s.pendent_paths(2), 0u);
    EXPECT_TRUE(s.is_series_reduced);
    EXPECT_TRUE(s.is_caterpillar);
    EXPECT_EQ(s.diameter, 2u);
}

TEST(Stats, SingleEdge) {
    const auto s = stats(build(PathSpec{2}));
    EXPECT_EQ(s.leaf_count, 2u);
    EXPECT_EQ(s.odd_count, 2u);
    EXPECT_TRUE(s.is_series_reduced);
    EXPECT_EQ(s.diameter, 1u);
}

TEST(Stats, RejectsSingleVertex) { EXPECT_THROW(stats(Tree::trivial()), TreeError); }

TEST(Stats, ExhaustiveInvariants) {
    for (std::size_t n = 2; n <= 11; ++n)
        for_each_free_tree(n, [&](const Tree& t, std::size_t) {
            const auto s = stats(t);
            std::size_t odd = 0, two = 0, branch = 0, leaves = 0;
            for (Vertex v = 0; v < n; ++v) {
                const auto d = t.degree(v);
                odd += d % 2;
                two += d == 2;
                branch += d >= 3;
                leaves += d == 1;
            }
            EXPECT_EQ(s.odd_count, odd);
            EXPECT_EQ(s.odd_count % 2, 0u);
            EXPECT_EQ(s.deg2_count, two);
            EXPECT_EQ(s.branch_count, branch);
            EXPECT_EQ(s.leaf_count, leaves);
            if (n >= 3)
                EXPECT_EQ(s.pendent_paths(1), s.leaf_count);
            EXPECT_EQ(s.is_series_reduced, two == 0);
            EXPECT_EQ(s.is_caterpillar, oracle::is_caterpillar(t));
            EXPECT_EQ(s.diameter, oracle::diameter(t));
            EXPECT_TRUE(std::is_sorted(s.degree_sequence.rbegin(), s.degree_sequence.rend()));
            std::size_t runs = 0;
            for (std::size_t r = 0; r < s.run_histogram.size(); ++r)
                runs += s.run_histogram[r];
            EXPECT_EQ(runs, s.leaf_count);
            for (std::size_t r = 1; r + 1 < s.census.size(); ++r)
                EXPECT_EQ(s.pendent_paths(r) - s.pendent_paths(r + 1), s.maximal_pendent_paths(r));
        });
}

TEST(Stats, LongestPathHasDiameterLength) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Tree t = random_tree(60, seed);
        const auto p = longest_path(t);
        EXPECT_EQ(p.size() - 1, diameter(t));
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            EXPECT_TRUE(t.has_edge(p[i], p[i + 1]));
    }
}
