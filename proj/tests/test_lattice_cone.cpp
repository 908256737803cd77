#include "cbsg/lattice_cone.hpp"
#include "cbsg/oracle.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace cbsg;
using namespace cbsg::testing;

namespace {

std::vector<IntVec2> pts(std::initializer_list<IntVec2> l)
{
    std::vector<IntVec2> v(l);
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<IntVec3> lift(const Polygon& F)
{
    std::vector<IntVec3> out;
    for (const QPoint& p : F.vertices()) {
        const Rat &x = p.x.rat_part(), &y = p.y.rat_part();
        Int den = lcm(x.get_den(), y.get_den());
        out.push_back({to_i64(Int(x * den)), to_i64(Int(y * den)), to_i64(den)});
    }
    return out;
}

// Irreducible lattice points of the cone over F x {1}, among points with
// coordinate sum <= bound.
std::vector<IntVec3> brute_hilbert_3d(const Polygon& F, std::int64_t bound)
{
    std::set<IntVec3> members;
    for (std::int64_t z = 1; z <= bound; ++z)
        for (std::int64_t x = 0; x + z <= bound; ++x)
            for (std::int64_t y = 0; x + y + z <= bound; ++y) {
                QPoint p{QuadRat(Rat(x, z)), QuadRat(Rat(y, z))};
                if (F.contains(p))
                    members.insert({x, y, z});
            }
    std::vector<IntVec3> out;
    for (IntVec3 p : members) {
        bool split = false;
        for (IntVec3 q : members)
            if (q != p && q.x <= p.x && q.y <= p.y && q.z <= p.z && members.count(p - q)) {
                split = true;
                break;
            }
        if (!split)
            out.push_back(p);
    }
    return out;
}

Cone2 random_cone(Rng& rng)
{
    for (;;) {
        IntVec2 a{uniform(rng, 0, 9), uniform(rng, 0, 9)}, b{uniform(rng, 0, 9), uniform(rng, 0, 9)};
        if (a == IntVec2{0, 0} || b == IntVec2{0, 0})
            continue;
        a = primitive(a);
        b = primitive(b);
        if (cross(b, a) < 0)
            std::swap(a, b);
        if (cross(b, a) == 0)
            continue;
        return Cone2{a, b, false}; // ray_hi = a has the larger slope
    }
}

}

TEST(ConeOfBody, ExampleCircleRays)
{
    const ConeAnalysis an = cone_of_body(Circle(Rat(7, 3), Rat(4, 3), Rat(1, 3)));
    ASSERT_EQ(an.status, ConeStatus::proper);
    EXPECT_EQ(an.cone().ray_hi, (IntVec2{4, 3}));
    EXPECT_EQ(an.cone().ray_lo, (IntVec2{12, 5}));
    EXPECT_EQ(an.hi.kind, Contact::point);
    EXPECT_EQ(an.lo.kind, Contact::point);
    EXPECT_EQ(an.hi.near, (QPoint{QuadRat(Rat(32, 15)), QuadRat(Rat(8, 5))}));
    EXPECT_EQ(an.lo.near, (QPoint{QuadRat(Rat(32, 13)), QuadRat(Rat(40, 39))}));
}

TEST(ConeOfBody, SquareRays)
{
    Polygon sq({{QuadRat(1), QuadRat(1)}, {QuadRat(1), QuadRat(2)}, {QuadRat(2), QuadRat(2)}, {QuadRat(2), QuadRat(1)}});
    const ConeAnalysis an = cone_of_body(sq);
    EXPECT_EQ(an.cone().ray_hi, (IntVec2{1, 2}));
    EXPECT_EQ(an.cone().ray_lo, (IntVec2{2, 1}));
    EXPECT_EQ(an.hi.kind, Contact::point);
    EXPECT_EQ(an.lo.kind, Contact::point);
}

TEST(ConeOfBody, CircleTangentToAxis)
{
    const ConeAnalysis an = cone_of_body(Circle(Rat(2), Rat(1), Rat(1)));
    EXPECT_EQ(an.cone().ray_hi, (IntVec2{3, 4}));
    EXPECT_EQ(an.cone().ray_lo, (IntVec2{1, 0}));
    EXPECT_EQ(an.hi.near, (QPoint{QuadRat(Rat(6, 5)), QuadRat(Rat(8, 5))}));
    EXPECT_EQ(an.lo.near, (QPoint{QuadRat(2), QuadRat(0)}));
    EXPECT_EQ(an.lo.kind, Contact::point);
}

TEST(ConeOfBody, SegmentAndEmpty)
{
    const ConeAnalysis seg = cone_of_body(RaySegment({2, 4}, QuadRat(1), QuadRat(2)));
    EXPECT_EQ(seg.status, ConeStatus::single_ray);
    EXPECT_EQ(seg.hi.g, (IntVec2{1, 2}));
    EXPECT_EQ(cone_of_body(Circle(Rat(-5), Rat(-5), Rat(1))).status, ConeStatus::empty_body);
}

TEST(HilbertBasis2d, Examples)
{
    EXPECT_EQ(hilbert_basis_2d({{4, 3}, {12, 5}, false}).points, pts({{4, 3}, {12, 5}, {2, 1}, {3, 2}, {7, 3}}));
    EXPECT_EQ(hilbert_basis_2d({{0, 1}, {1, 0}, false}).points, pts({{1, 0}, {0, 1}}));
    EXPECT_EQ(hilbert_basis_2d({{1, 2}, {2, 1}, false}).points, pts({{2, 1}, {1, 1}, {1, 2}}));
}

TEST(HilbertBasis2d, GeneratesTheConeAndIsMinimal)
{
    Rng rng(501);
    for (int k = 0; k < 50; ++k) {
        const Cone2 c = random_cone(rng);
        const GenSet hb = hilbert_basis_2d(c);
        const std::set<IntVec2> gen = brute_generated(hb.points, {60, 60});
        for (std::int64_t x = 0; x <= 60; ++x)
            for (std::int64_t y = 0; x + y <= 60; ++y)
                ASSERT_EQ(c.contains({x, y}), gen.count({x, y}) == 1)
                    << "cone " << c.ray_hi << c.ray_lo << " point " << IntVec2{x, y};
        for (IntVec2 g : hb.points) {
            std::vector<IntVec2> rest;
            for (IntVec2 h : hb.points)
                if (h != g)
                    rest.push_back(h);
            ASSERT_FALSE(member_of_generated(g, GenSet(rest, false)));
        }
    }
}

TEST(HilbertBasis3d, UnitVectors)
{
    const GenSet3 g = hilbert_basis_3d({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    EXPECT_EQ(g.points, (std::vector<IntVec3>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
}

TEST(HilbertBasis3d, LiftedSegment)
{
    const GenSet3 g = hilbert_basis_3d({{2, 0, 1}, {0, 2, 1}});
    EXPECT_EQ(g.points, (std::vector<IntVec3>{{0, 2, 1}, {1, 1, 1}, {2, 0, 1}}));
}

TEST(HilbertBasis3d, LiftedUnitSquareMatchesBruteForce)
{
    Polygon sq({{QuadRat(1), QuadRat(1)}, {QuadRat(1), QuadRat(2)}, {QuadRat(2), QuadRat(2)}, {QuadRat(2), QuadRat(1)}});
    const GenSet3 g = hilbert_basis_3d(lift(sq));
    EXPECT_EQ(g.points, brute_hilbert_3d(sq, 12));
}

TEST(HilbertBasis3d, RandomPolygonsMatchBruteForce)
{
    Rng rng(88);
    for (int k = 0; k < 12; ++k) {
        const Polygon F = random_rational_polygon(rng, 4, 3, 2);
        const GenSet3 g = hilbert_basis_3d(lift(F));
        // every basis element fits well inside the brute-force window here
        std::int64_t top = 0;
        for (IntVec3 p : g.points)
            top = std::max(top, p.x + p.y + p.z);
        ASSERT_LE(top, 20);
        EXPECT_EQ(g.points, brute_hilbert_3d(F, 2 * top + 2));
    }
}

TEST(HilbertBasis3d, RejectsRaysOutsideTheOctant)
{
    EXPECT_THROW(hilbert_basis_3d({{1, -1, 1}, {1, 1, 1}}), PreconditionError);
}

TEST(ProjectToPlane, Examples)
{
    EXPECT_EQ(project_to_plane(GenSet3({{1, 0, 1}, {0, 1, 1}}, true)).points, pts({{1, 0}, {0, 1}}));
    EXPECT_EQ(project_to_plane(GenSet3({{2, 0, 1}, {0, 2, 1}, {1, 1, 1}}, true)).points, pts({{2, 0}, {0, 2}, {1, 1}}));
    EXPECT_EQ(project_to_plane(GenSet3({{1, 1, 1}, {2, 2, 2}}, false)).points, pts({{1, 1}}));
}

TEST(ProjectToPlane, ConeShortcutAgreesWithDynamicProgram)
{
    Rng rng(4242);
    for (int k = 0; k < 20; ++k) {
        const std::vector<IntVec3> rays = lift(random_rational_polygon(rng, 5, 4, 3));
        const GenSet3 g = hilbert_basis_3d(rays);
        EXPECT_EQ(project_to_plane(g, rays), project_to_plane(g));
    }
}

TEST(ProjectToPlane, LiftedPolygonsGenerateTheOracleSet)
{
    Rng rng(1201);
    for (int k = 0; k < 20; ++k) {
        const Polygon F = random_rational_polygon(rng, 4, 3, 2);
        const std::vector<IntVec3> rays = lift(F);
        const GenSet g = project_to_plane(hilbert_basis_3d(rays), rays);
        const std::set<IntVec2> gen = brute_generated(g.points, {40, 40});
        const oracle::DilationBody body = oracle::polygon_body(F);
        for (IntVec2 p : oracle::enumerate_members(body, 40))
            ASSERT_TRUE(gen.count(p)) << p;
        for (IntVec2 p : gen)
            if (norm1(p) <= 40)
                ASSERT_TRUE(oracle::dilation_member(p.x, p.y, body)) << p;
    }
}

TEST(Minimalize, Examples)
{
    EXPECT_EQ(minimalize({{2, 0}, {3, 0}, {0, 1}, {1, 1}, {2, 1}}).points, pts({{2, 0}, {3, 0}, {0, 1}, {1, 1}}));
    EXPECT_EQ(minimalize({{1, 0}}).points, pts({{1, 0}}));
    const std::vector<IntVec2> sprime{{2, 1}, {3, 2}, {7, 3}, {7, 5}, {11, 8}, {15, 11}, {19, 14}, {23, 17}, {27, 20},
        {31, 23}, {32, 24}, {96, 40}, {19, 8}, {31, 13}, {43, 18}, {55, 23}, {67, 28}, {79, 33}, {91, 38}};
    std::vector<IntVec2> sorted = sprime;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(minimalize(sprime).points, sorted);
    EXPECT_THROW(minimalize({{-1, 2}}), PreconditionError);
}

TEST(Minimalize, IdempotentAndOrderInsensitive)
{
    Rng rng(99);
    for (int k = 0; k < 40; ++k) {
        std::vector<IntVec2> v;
        const int n = static_cast<int>(uniform(rng, 1, 12));
        for (int i = 0; i < n; ++i)
            v.push_back({uniform(rng, 0, 12), uniform(rng, 0, 12)});
        const GenSet once = minimalize(v);
        EXPECT_EQ(minimalize(once.points), once);
        std::shuffle(v.begin(), v.end(), rng);
        EXPECT_EQ(minimalize(v), once);
        // same semigroup, and nothing in the result is redundant
        const std::set<IntVec2> a = brute_generated(v, {30, 30}), b = brute_generated(once.points, {30, 30});
        EXPECT_EQ(a, b);
        std::vector<IntVec2> irr = brute_irreducibles(b);
        std::vector<IntVec2> small;
        for (IntVec2 p : once.points)
            if (p.x <= 30 && p.y <= 30)
                small.push_back(p);
        EXPECT_EQ(irr, small);
    }
}

TEST(MemberOfGenerated, Examples)
{
    EXPECT_TRUE(member_of_generated({8, 6}, GenSet({{4, 3}}, true)));
    EXPECT_FALSE(member_of_generated({2, 1}, GenSet({{4, 3}, {12, 5}}, true)));
    EXPECT_TRUE(member_of_generated({19, 8}, GenSet({{12, 5}, {7, 3}}, true)));
    EXPECT_TRUE(member_of_generated({0, 0}, GenSet({}, true)));
    EXPECT_FALSE(member_of_generated({-1, 0}, GenSet({{1, 0}}, true)));
}

TEST(Closure, EnumeratedMembersAreClosedUnderAddition)
{
    Rng rng(5);
    std::vector<oracle::DilationBody> bodies{oracle::circle_body(Circle(Rat(7, 3), Rat(4, 3), Rat(1, 3))),
        oracle::polygon_body(random_rational_polygon(rng)), oracle::circle_body(random_fg_circle(rng))};
    for (const auto& body : bodies) {
        const std::vector<IntVec2> m = oracle::enumerate_members(body, 30);
        const std::set<IntVec2> s(m.begin(), m.end());
        for (IntVec2 a : m)
            for (IntVec2 b : m)
                if (norm1(a + b) <= 30)
                    ASSERT_TRUE(s.count(a + b)) << a << " + " << b;
    }
}
