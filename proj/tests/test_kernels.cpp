#include "cbsg/kernels.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace cbsg;
namespace tst = cbsg::testing;
using cbsg::testing::Rng;
using cbsg::testing::uniform;

namespace {

std::vector<IntVec2> random_gens(Rng& rng)
{
    std::vector<IntVec2> g;
    const int n = static_cast<int>(uniform(rng, 1, 5));
    while (static_cast<int>(g.size()) < n) {
        IntVec2 v{uniform(rng, 0, 9), uniform(rng, 0, 9)};
        if (v != IntVec2{0, 0})
            g.push_back(v);
    }
    return g;
}

}

TEST(Kernels, ReachabilitySerialMatchesParallel)
{
    Rng rng(11);
    for (int threads : {1, 2, 4}) {
        kernels::set_threads(threads);
        for (int k = 0; k < 40; ++k) {
            auto g = random_gens(rng);
            IntVec2 box{uniform(rng, 0, 70), uniform(rng, 0, 70)};
            auto a = kernels::reachability_serial(g, box);
            auto b = kernels::reachability_parallel(g, box);
            ASSERT_EQ(a.cell, b.cell);
            ASSERT_EQ(kernels::reachability(g, box).cell, a.cell);
        }
    }
    kernels::set_threads(1);
}

TEST(Kernels, ReachabilityMatchesBreadthFirstSearch)
{
    Rng rng(12);
    for (int k = 0; k < 20; ++k) {
        auto g = random_gens(rng);
        IntVec2 box{30, 25};
        auto table = kernels::reachability_serial(g, box);
        auto seen = tst::brute_generated(g, box);
        for (std::int64_t x = 0; x <= box.x; ++x)
            for (std::int64_t y = 0; y <= box.y; ++y)
                ASSERT_EQ(table.at({x, y}), seen.count({x, y}) == 1) << x << "," << y;
        EXPECT_FALSE(table.at({-1, 0}));
        EXPECT_FALSE(table.at({box.x + 1, 0}));
    }
}

TEST(Kernels, ReachabilityRejectsBadGenerators)
{
    EXPECT_THROW(kernels::reachability_serial({{0, 0}}, {3, 3}), PreconditionError);
    EXPECT_THROW(kernels::reachability_parallel({{-1, 2}}, {3, 3}), PreconditionError);
}

TEST(Kernels, ScansSerialMatchParallel)
{
    Rng rng(13);
    kernels::set_threads(3);
    for (int k = 0; k < 30; ++k) {
        const std::int64_t m = uniform(rng, 2, 7), r = uniform(rng, 0, m - 1);
        auto pred = [m, r](IntVec2 p) { return (3 * p.x + 5 * p.y) % m == r; };
        IntVec2 box{uniform(rng, 0, 60), uniform(rng, 0, 60)};
        auto a = kernels::scan_box_serial(box, pred);
        ASSERT_EQ(a, kernels::scan_box_parallel(box, pred));
        ASSERT_TRUE(std::is_sorted(a.begin(), a.end()));
        const std::int64_t bound = uniform(rng, 0, 80);
        auto s = kernels::scan_simplex_serial(bound, pred);
        ASSERT_EQ(s, kernels::scan_simplex_parallel(bound, pred));
        ASSERT_EQ(s, kernels::scan_simplex(bound, pred));
        for (IntVec2 p : s)
            ASSERT_LE(p.x + p.y, bound);
    }
    kernels::set_threads(1);
}

TEST(Kernels, SimplexCountsPoints)
{
    auto all = [](IntVec2) { return true; };
    EXPECT_EQ(kernels::scan_simplex_serial(2, all).size(), 6u);
    EXPECT_EQ(kernels::scan_simplex_parallel(0, all), (std::vector<IntVec2>{{0, 0}}));
    EXPECT_EQ(kernels::scan_box_serial({2, 3}, all).size(), 12u);
}
