#include <gtest/gtest.h>

#include <random>

#include "lemma_checks.hpp"
#include "mostar/mostar.hpp"

using namespace mostar;

namespace {

/// The pendant leaf hanging at spine vertex `v` (id >= spine length).
Vertex pendant_at(const Tree& t, Vertex v, std::size_t spine) {
    for (Vertex w : t.neighbors(v))
        if (w >= spine && t.is_leaf(w))
            return w;
    throw std::logic_error("no pendant");
}

} // namespace

TEST(Contract, MiddleEdgeOfP4) {
    const Tree p4 = build(PathSpec{4});
    const Tree t = contract_with_pendant(p4, 1, 2);
    EXPECT_EQ(t.order(), 4u);
    EXPECT_TRUE(is_isomorphic(t, build(StarSpec{4})));
    EXPECT_EQ(mostar_index(p4), 4u);
    EXPECT_EQ(mostar_index(t), 6u);
}

TEST(Contract, Rejections) {
    const Tree p4 = build(PathSpec{4});
    EXPECT_THROW(contract_with_pendant(p4, 0, 1), HypothesisError);
    EXPECT_THROW(contract_with_pendant(p4, 0, 2), StructuralError);
}

TEST(Contract, ExhaustiveStrictIncrease) {
    checks::Tally total;
    for (std::size_t n = 4; n <= 10; ++n)
        for_each_free_tree(n, [&](const Tree& t, std::size_t) { total += checks::contraction(t); });
    EXPECT_GT(total.cases, 0u);
    EXPECT_EQ(total.violations, 0u);
}

TEST(Rebalance, SpiderWithExtraPendant) {
    // center 0, legs 0-1-2 and 0-3-4, pendant 5
    const Tree g(6, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}});
    const Tree h = rebalance_paths(g, 0, 2, 2);
    EXPECT_EQ(h.order(), 6u);
    std::vector<std::size_t> legs;
    for (const auto& leg : pendent_legs(h, 0))
        legs.push_back(leg.length);
    std::sort(legs.rbegin(), legs.rend());
    EXPECT_EQ(legs, (std::vector<std::size_t>{3, 1, 1}));
    EXPECT_EQ(mostar_index(g), 16u);
    EXPECT_EQ(mostar_index(h), 14u);
}

TEST(Rebalance, ShortLegOfOneVanishes) {
    const Tree g(6, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {0, 5}});
    const Tree h = rebalance_paths(g, 0, 2, 1);
    EXPECT_EQ(h.degree(0), 3u);
    EXPECT_EQ(stats(h).pendent_paths(3), 1u);
    EXPECT_GT(mostar_index(g), mostar_index(h));
}

TEST(Rebalance, Rejections) {
    const Tree g(6, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}});
    EXPECT_THROW(rebalance_paths(g, 0, 1, 2), HypothesisError);
    EXPECT_THROW(rebalance_paths(g, 0, 3, 1), StructuralError);
    EXPECT_THROW(rebalance_paths(build(PathSpec{5}), 2, 2, 2), HypothesisError);
}

TEST(Rebalance, ExhaustiveStrictDecrease) {
    checks::Tally total;
    for (std::size_t n = 4; n <= 9; ++n)
        for_each_free_tree(n, [&](const Tree& t, std::size_t) { total += checks::rebalance(t); });
    EXPECT_GT(total.cases, 0u);
    EXPECT_EQ(total.violations, 0u);
}

TEST(Rebalance, RandomStrictDecrease) {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::size_t> order(5, 60);
    checks::Tally total;
    while (total.cases < 500)
        total += checks::rebalance(random_tree(order(rng), rng()));
    EXPECT_EQ(total.violations, 0u);
}

TEST(PendantMoves, DoubleStar) {
    const Tree t(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
    const auto [t1, t2] = move_pendants_to_path_neighbor(t, 0, 1);
    EXPECT_EQ(mostar_index(t), 16u);
    EXPECT_EQ(mostar_index(t1), 20u);
    EXPECT_EQ(mostar_index(t2), 20u);
    EXPECT_TRUE(is_isomorphic(t1, build(StarSpec{6})));
    EXPECT_EQ(t1.degree(1), 5u);
    EXPECT_EQ(t2.degree(0), 5u);
}

TEST(PendantMoves, Rejections) {
    const Tree t(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
    EXPECT_THROW(move_pendants_to_path_neighbor(t, 0, 0), HypothesisError);
    EXPECT_THROW(move_pendants_to_path_neighbor(build(PathSpec{5}), 0, 4), HypothesisError);
}

TEST(PendantMoves, ExhaustiveMaxIncreases) {
    checks::Tally total;
    for (std::size_t n = 4; n <= 9; ++n)
        for_each_free_tree(n, [&](const Tree& t, std::size_t) { total += checks::pendant_moves(t); });
    EXPECT_GT(total.cases, 0u);
    EXPECT_EQ(total.violations, 0u);
}

TEST(PsiBound, Exhaustive) {
    checks::Tally total;
    for (std::size_t n = 2; n <= 10; ++n)
        for_each_free_tree(n, [&](const Tree& t, std::size_t) { total += checks::psi_bound(t); });
    EXPECT_EQ(total.violations, 0u);
}

TEST(BranchShift, PendantMovedToShortEnd) {
    // spine 0..6, pendant 7 at vertex 2
    const Tree t(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 7}});
    const std::vector<Vertex> path{0, 1, 2, 3, 4, 5, 6};
    const auto o = shift_branch_to_end(t, path, 2, 1);
    EXPECT_TRUE(o.hypothesis_held);
    EXPECT_LT(o.mo_after, o.mo_before);
    EXPECT_TRUE(o.after.has_edge(0, 7));
    EXPECT_EQ(o.after.degree(2), 2u);
}

TEST(BranchShift, MovingEveryBranch) {
    const Tree t = build(CaterpillarSpec{{2, 5, 2, 2}});
    const auto path = longest_path(t);
    const auto it = std::find(path.begin(), path.end(), Vertex{1});
    const auto i = std::size_t(it - path.begin());
    const auto o = shift_branch_to_end(t, path, i, 3);
    EXPECT_EQ(o.after.degree(1), 2u);
    EXPECT_EQ(o.after.order(), t.order());
}

TEST(BranchShift, Rejections) {
    const Tree t(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 7}});
    const std::vector<Vertex> path{0, 1, 2, 3, 4, 5, 6};
    EXPECT_THROW(shift_branch_to_end(t, path, 0, 1), StructuralError);
    EXPECT_THROW(shift_branch_to_end(t, path, 3, 1), StructuralError);
    EXPECT_THROW(shift_branch_to_end(t, path, 2, 2), HypothesisError);
    const std::vector<Vertex> short_path{0, 1, 2, 3, 4, 5};
    EXPECT_THROW(shift_branch_to_end(t, short_path, 2, 1), StructuralError);
    const std::vector<Vertex> broken{0, 2, 1, 3, 4, 5, 6};
    EXPECT_THROW(shift_branch_to_end(t, broken, 2, 1), StructuralError);
}

TEST(BranchShift, ExhaustiveUnderHypothesis) {
    checks::ShiftTally total;
    for (std::size_t n = 5; n <= 9; ++n)
        for_each_free_tree(n, [&](const Tree& t, std::size_t) {
            const auto s = checks::branch_shift(t);
            total.held += s.held;
            total.not_held += s.not_held;
        });
    EXPECT_GT(total.held.cases, 0u);
    EXPECT_EQ(total.held.violations, 0u);
}

TEST(Relocate, CFamilyShift) {
    // C(12,3,1): spine 0..7, pendants at v2..v4 and v7
    const Tree c = build(CSpec{12, 3, 1});
    const Vertex leaf = pendant_at(c, 3, 8);
    const Tree moved = relocate_pendant(c, leaf, 3, 5);
    EXPECT_TRUE(is_isomorphic(moved, build(CSpec{12, 2, 2})));
    EXPECT_LT(mostar_index(moved), mostar_index(c));
}

TEST(Relocate, FFamilyShift) {
    const Tree f = build(FSpec{17, 3, 1});
    EXPECT_LT(mostar_index(build(FSpec{17, 2, 2})), mostar_index(f));
}

TEST(Relocate, MovesWholePendentPath) {
    const Tree a = build(ASpec{14, 2, 3, 1});
    const std::size_t spine = 14 - 4 * 2;
    const auto legs = pendent_legs(a, 0);
    const auto leg = std::find_if(legs.begin(), legs.end(), [](const auto& l) { return l.length == 2; });
    ASSERT_NE(leg, legs.end());
    const Tree moved = relocate_pendant(a, leg->head, 0, Vertex(spine - 1));
    EXPECT_TRUE(is_isomorphic(moved, build(ASpec{14, 2, 2, 2})));
}

TEST(Relocate, Rejections) {
    const Tree c = build(CSpec{7, 1, 1});
    EXPECT_THROW(relocate_pendant(c, 5, 1, 1), HypothesisError);
    EXPECT_THROW(relocate_pendant(c, 5, 2, 3), StructuralError);
    // the branch at v3 toward v4 carries a pendant, so it is not a bare path
    EXPECT_THROW(relocate_pendant(c, 3, 2, 0), HypothesisError);
    // target on the moved path
    const Tree p = build(PathSpec{5});
    EXPECT_THROW(relocate_pendant(p, 2, 1, 3), HypothesisError);
}

TEST(FamilyShifts, CShiftDecreases) {
    for (int n = 5; n <= 40; ++n)
        for (int b = 0; 2 * b <= n; ++b)
            for (int a = b + 2; 2 * (a + b) <= n - 3; ++a) {
                const Tree c = build(CSpec{n, a, b});
                const std::size_t spine = std::size_t(n - a - b);
                const Tree moved = relocate_pendant(c, pendant_at(c, Vertex(a), spine), Vertex(a),
                                                    Vertex(n - a - 2 * b - 2));
                const Tree next = build(CSpec{n, a - 1, b + 1});
                ASSERT_TRUE(is_isomorphic(moved, next)) << n << " " << a << " " << b;
                EXPECT_LT(mostar_index(next), mostar_index(c)) << n << " " << a << " " << b;
            }
}

TEST(FamilyShifts, FShiftDecreases) {
    for (int n = 8; n <= 40; ++n)
        for (int b = 1; 2 * b <= n; ++b)
            for (int a = b; 2 * (a + b) < n - 5; ++a) {
                const Tree f = build(FSpec{n, a, b});
                const std::size_t spine = std::size_t(n - a - b - 2);
                const Tree moved = relocate_pendant(f, pendant_at(f, Vertex(a + 1), spine), Vertex(a + 1),
                                                    Vertex(n - a - 2 * b - 4));
                const Tree next = build(FSpec{n, a - 1, b + 1});
                ASSERT_TRUE(is_isomorphic(moved, next)) << n << " " << a << " " << b;
                EXPECT_LT(mostar_index(next), mostar_index(f)) << n << " " << a << " " << b;
            }
}

TEST(FamilyShifts, AShiftDecreases) {
    for (int n = 4; n <= 40; ++n)
        for (int r = 1; r <= n; ++r)
            for (int b = 1; (b + 2 + b) * r < n - 1; ++b)
                for (int a = b + 2; (a + b) * r < n - 1; ++a) {
                    const Tree t = build(ASpec{n, r, a, b});
                    const auto legs = pendent_legs(t, 0);
                    const auto leg =
                        std::find_if(legs.begin(), legs.end(), [&](const auto& l) { return l.length == std::size_t(r); });
                    ASSERT_NE(leg, legs.end());
                    const Vertex far_end = Vertex(n - (a + b) * r - 1);
                    const Tree moved = relocate_pendant(t, leg->head, 0, far_end);
                    const Tree next = build(ASpec{n, r, a - 1, b + 1});
                    ASSERT_TRUE(is_isomorphic(moved, next)) << n << " " << r << " " << a << " " << b;
                    EXPECT_LT(mostar_index(next), mostar_index(t)) << n << " " << r << " " << a << " " << b;
                }
}
