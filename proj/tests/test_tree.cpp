#include <gtest/gtest.h>

#include "mostar/mostar.hpp"

using namespace mostar;

TEST(Tree, BuildsAdjacency) {
    const Tree t(4, {{0, 1}, {1, 2}, {1, 3}});
    EXPECT_EQ(t.order(), 4u);
    EXPECT_EQ(t.size(), 3u);
    EXPECT_EQ(t.degree(1), 3u);
    EXPECT_TRUE(t.is_leaf(0));
    EXPECT_TRUE(t.has_edge(2, 1));
    EXPECT_FALSE(t.has_edge(2, 3));
    EXPECT_EQ(t.edge_index(3, 1), 2u);
    EXPECT_FALSE(t.edge_index(0, 2).has_value());
    EXPECT_TRUE(t.is_pendent_edge(1, 3));
}

TEST(Tree, AdjacencyIsSymmetric) {
    const Tree t = random_tree(200, 7);
    for (Vertex v = 0; v < t.order(); ++v)
        for (Vertex w : t.neighbors(v)) {
            EXPECT_NE(v, w);
            EXPECT_TRUE(t.has_edge(w, v));
        }
}

TEST(Tree, RejectsMalformedInput) {
    EXPECT_THROW(Tree(0, {}), TreeError);
    EXPECT_THROW(Tree(3, {{0, 1}}), TreeError);
    EXPECT_THROW(Tree(3, {{0, 1}, {1, 3}}), TreeError);
    EXPECT_THROW(Tree(3, {{0, 0}, {1, 2}}), TreeError);
    EXPECT_THROW(Tree(4, {{0, 1}, {1, 2}, {2, 0}}), TreeError);
    EXPECT_THROW(Tree(3, {{0, 1}, {0, 1}}), TreeError);
}

TEST(Tree, SingleVertex) {
    const Tree t = Tree::trivial();
    EXPECT_EQ(t.order(), 1u);
    EXPECT_EQ(t.size(), 0u);
    EXPECT_EQ(t.degree(0), 0u);
}

TEST(Tree, PathBetweenVertices) {
    const Tree t(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}});
    EXPECT_EQ(tree_path(t, 4, 3), (std::vector<Vertex>{4, 1, 2, 3}));
    EXPECT_EQ(tree_path(t, 2, 2), (std::vector<Vertex>{2}));
    EXPECT_EQ(side_order(t, 1, 2), 3u);
    EXPECT_EQ(side_order(t, 2, 1), 2u);
}
