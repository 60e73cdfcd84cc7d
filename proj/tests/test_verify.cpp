#include <gtest/gtest.h>

#include <thread>

#include "mostar/mostar.hpp"

using namespace mostar;

namespace {

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

const VerificationReport* find_report(const std::vector<VerificationReport>& reps, int n, const ParamList& params,
                                      Direction d) {
    for (const auto& r : reps)
        if (r.n == n && r.params == params && r.direction == d)
            return &r;
    return nullptr;
}

} // namespace

TEST(Extremal, SevenVertices) {
    const auto mx = extremal_search(7, Unconstrained{}, Direction::max);
    EXPECT_EQ(mx.value, 30u);
    EXPECT_EQ(mx.argopt, std::vector<std::string>{canonical_form(build(StarSpec{7}))});
    EXPECT_EQ(mx.class_size, 11u);

    const auto mn = extremal_search(7, Unconstrained{}, Direction::min);
    EXPECT_EQ(mn.value, 18u);
    EXPECT_EQ(mn.argopt, std::vector<std::string>{canonical_form(build(PathSpec{7}))});
}

TEST(Extremal, OddCountMinimizer) {
    const auto r = extremal_search(7, OddCount{2}, Direction::min);
    const auto c = canonical_form(build(CSpec{7, 1, 0}));
    EXPECT_TRUE(std::binary_search(r.argopt.begin(), r.argopt.end(), c));
}

TEST(Extremal, ShardedSearchAgrees) {
    for (auto dir : {Direction::max, Direction::min})
        for (const ConstraintSpec& c : {ConstraintSpec{Unconstrained{}}, ConstraintSpec{OddCount{3}},
                                        ConstraintSpec{Deg2Count{2}}, ConstraintSpec{SeriesReduced{}}}) {
            const auto one = extremal_search(12, c, dir, 1);
            const auto many = extremal_search(12, c, dir, 5);
            EXPECT_EQ(one.value, many.value);
            EXPECT_EQ(one.argopt, many.argopt);
            EXPECT_EQ(one.class_size, many.class_size);
        }
}

TEST(Extremal, EmptyDegreeTwoClass) {
    for (int n = 4; n <= 14; ++n) {
        const auto r = extremal_search(std::size_t(n), Deg2Count{n - 3}, Direction::min);
        EXPECT_TRUE(r.empty()) << n;
        EXPECT_EQ(r.class_size, 0u);
        EXPECT_FALSE(r.value.has_value());
    }
}

TEST(Registry, ContainsEveryClaim) {
    for (const char* id :
         {"T2.1", "T2.6", "C2.7", "LDL-min-degseq", "T3.1", "T3.2", "C3.3", "T3.4", "T4.1", "T4.3", "C4.4", "T5.1", "T5.3"})
        EXPECT_NE(find_claim(id), nullptr) << id;
    EXPECT_EQ(find_claim("T9.9"), nullptr);
}

TEST(Registry, OddSpiderExample) {
    const auto reps = check_claim(*find_claim("T3.1"), 8, 8);
    const auto* r = find_report(reps, 8, {{"k", 2}}, Direction::max);
    ASSERT_NE(r, nullptr);
    EXPECT_EQ(r->claimed_family, "spider:n=8,r=4");
    EXPECT_TRUE(r->claimed_is_argopt);
}

TEST(Registry, DegreeTwoEvenCase) {
    const auto reps = check_claim(*find_claim("T4.3"), 10, 10);
    const auto* r = find_report(reps, 10, {{"t", 4}}, Direction::min);
    ASSERT_NE(r, nullptr);
    EXPECT_EQ(r->claimed_family, "C:n=10,a=1,b=1");
    EXPECT_TRUE(r->claimed_is_argopt);
    // C(10,2,1) has only two vertices of degree two
    EXPECT_EQ(stats(build(CSpec{10, 2, 1})).deg2_count, 2u);
}

TEST(Registry, DegreeTwoBoundaryCase) {
    for (int n = 6; n <= 12; ++n) {
        const auto reps = check_claim(*find_claim("T4.3"), n, n);
        const auto* r = find_report(reps, n, {{"t", n - 5}}, Direction::min);
        ASSERT_NE(r, nullptr);
        EXPECT_EQ(r->claimed_family, "F:n=" + std::to_string(n) + ",a=0,b=0");
        EXPECT_TRUE(r->claimed_is_argopt);
    }
}

TEST(Registry, PendentPathPairIsPath) {
    const auto reps = check_claim(*find_claim("T5.3"), 9, 9);
    std::size_t seen = 0;
    for (const auto& r : reps)
        if (r.params.size() == 2 && r.params[0] == std::pair<std::string, int>{"k", 2}) {
            EXPECT_EQ(r.claimed_family, "path:n=9");
            EXPECT_TRUE(r.claimed_is_argopt);
            ++seen;
        }
    EXPECT_EQ(seen, 7u);
}

TEST(Registry, AllClaimsHoldOnSmallOrders) {
    CheckOptions opt;
    opt.threads = workers();
    for (const auto& claim : theorem_registry()) {
        const auto reps = check_claim(claim, 5, 11, opt);
        EXPECT_FALSE(reps.empty()) << claim.id;
        for (const auto& r : reps) {
            EXPECT_TRUE(r.valid_instance) << claim.id << " n=" << r.n << " " << r.invalid_reason;
            EXPECT_FALSE(r.failed()) << claim.id << " n=" << r.n << " " << r.constraint << " "
                                     << to_string(r.direction);
            if (r.value_match)
                EXPECT_TRUE(r.claimed_is_argopt);
        }
    }
}

TEST(Registry, ReportsAreSortedAndThreadIndependent) {
    CheckOptions one;
    CheckOptions many;
    many.threads = 4;
    const auto a = check_claim(*find_claim("T4.3"), 6, 10, one);
    const auto b = check_claim(*find_claim("T4.3"), 6, 10, many);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].n, b[i].n);
        EXPECT_EQ(a[i].params, b[i].params);
        EXPECT_EQ(a[i].direction, b[i].direction);
        EXPECT_EQ(a[i].brute_value, b[i].brute_value);
        if (i > 0)
            EXPECT_LE(std::tie(a[i - 1].n, a[i - 1].params, a[i - 1].direction),
                      std::tie(a[i].n, a[i].params, a[i].direction));
    }
}

TEST(Registry, AllOddAgreesWithOddCountMinimizer) {
    for (int n = 4; n <= 20; n += 2) {
        const auto a = claimed_extremal(n, OddCount{n / 2}, Direction::min);
        const auto b = claimed_extremal(n, AllOdd{}, Direction::min);
        ASSERT_TRUE(a && b);
        EXPECT_TRUE(is_isomorphic(build(*a), build(*b))) << n;
    }
}

TEST(Registry, SpiderMonotone) {
    const auto reps = check_claim(*find_claim("C2.7"), 5, 30);
    EXPECT_FALSE(reps.empty());
    EXPECT_TRUE(all_hold(reps));
}

TEST(Registry, CapIsEnforced) {
    EXPECT_THROW(check_claim(*find_claim("T3.1"), 5, 19), ResourceError);
}

TEST(DegreeSequences, SevenVertices) {
    const auto rep = check_degree_sequence_structure(7);
    EXPECT_FALSE(rep.findings.empty());
    EXPECT_EQ(rep.violations(), 0u);
}

TEST(DegreeSequences, ValleyShape) {
    EXPECT_TRUE(is_valley({5, 3, 2, 2, 4}));
    EXPECT_TRUE(is_valley({2, 3, 4}));
    EXPECT_TRUE(is_valley({4, 3, 2}));
    EXPECT_TRUE(is_valley({3, 3}));
    EXPECT_FALSE(is_valley({2, 4, 2}));
    EXPECT_FALSE(is_valley({3, 2, 3, 2}));
    EXPECT_TRUE(is_valley_caterpillar(build(StarSpec{6})));
    EXPECT_TRUE(is_valley_caterpillar(build(PathSpec{6})));
    EXPECT_FALSE(is_valley_caterpillar(build(CaterpillarSpec{{2, 4, 2}})));
    EXPECT_FALSE(is_valley_caterpillar(build(SpiderSpec{10, 3})));
}

TEST(Reports, JsonAndCsv) {
    const auto reps = check_claim(*find_claim("T3.2"), 6, 7);
    const auto j = nlohmann::json::parse(reports_to_json("T3.2", reps).dump());
    EXPECT_EQ(j["claim"], "T3.2");
    ASSERT_EQ(j["instances"].size(), reps.size());
    for (const char* key : {"n", "params", "direction", "brute_value", "claimed_value", "value_match",
                            "claimed_is_argopt", "argopt_unique", "argopt_count", "millis"})
        EXPECT_TRUE(j["instances"][0].contains(key)) << key;
    std::string csv = csv_header();
    for (const auto& r : reps)
        csv += to_csv_row(r);
    EXPECT_EQ(std::size_t(std::count(csv.begin(), csv.end(), '\n')), reps.size() + 1);
}
