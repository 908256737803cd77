#pragma once

// Fixed-seed body generators and small brute-force references shared by
// the unit tests and the acceptance binary. The references only use exact
// arithmetic and plain enumeration.

#include "cbsg/body.hpp"
#include "cbsg/circle_sg.hpp"
#include "cbsg/geometry.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace cbsg::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Rat random_rat(Rng& rng, std::int64_t lo_num, std::int64_t hi_num, std::int64_t max_den)
{
    const std::int64_t q = uniform(rng, 1, max_den);
    Rat r(uniform(rng, lo_num * q, hi_num * q), q);
    r.canonicalize();
    return r;
}

// Finitely generated circle away from the origin whose cone has small
// extremal rays and a small stabilization index, so its generators stay at
// desk scale. Contacts may be tangencies or chords on the axes.
inline Circle random_fg_circle(Rng& rng, std::int64_t max_ray = 12, std::int64_t max_i0 = 30)
{
    for (;;) {
        const Rat a = random_rat(rng, 0, 5, 3), b = random_rat(rng, 0, 5, 3), r = random_rat(rng, 0, 2, 6);
        if (sgn(r) <= 0 || sgn(a) <= 0 || sgn(b) <= 0)
            continue;
        const Circle C(a, b, r);
        if (circle_fg_decision(C).verdict != FgVerdict::finitely_generated)
            continue;
        const ConeAnalysis an = circle_cone(C);
        if (an.status != ConeStatus::proper)
            continue;
        const Cone2 cone = an.cone();
        if (std::max({cone.ray_hi.x, cone.ray_hi.y, cone.ray_lo.x, cone.ray_lo.y}) > max_ray)
            continue;
        if (stabilization(C).i0 > max_i0)
            continue;
        return C;
    }
}

// Random strictly convex polygon with small rational vertices in the
// closed quadrant (convex hull of a few random points).
inline Polygon random_rational_polygon(Rng& rng, int points = 5, std::int64_t max_coord = 4, std::int64_t max_den = 3)
{
    for (;;) {
        std::vector<std::pair<Rat, Rat>> pts;
        for (int i = 0; i < points; ++i)
            pts.push_back({random_rat(rng, 0, max_coord, max_den), random_rat(rng, 0, max_coord, max_den)});
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        if (pts.size() < 3)
            continue;
        auto turn = [](const std::pair<Rat, Rat>& o, const std::pair<Rat, Rat>& a, const std::pair<Rat, Rat>& b) -> Rat {
            return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
        };
        // Andrew's monotone chain, dropping collinear points
        const std::size_t n = pts.size();
        std::vector<std::pair<Rat, Rat>> hull(2 * n);
        std::size_t k = 0;
        for (std::size_t i = 0; i < n; ++i) {
            while (k >= 2 && sgn(turn(hull[k - 2], hull[k - 1], pts[i])) <= 0)
                --k;
            hull[k++] = pts[i];
        }
        for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
            while (k >= t && sgn(turn(hull[k - 2], hull[k - 1], pts[i])) <= 0)
                --k;
            hull[k++] = pts[i];
        }
        hull.resize(k - 1);
        if (hull.size() < 3)
            continue;
        std::vector<QPoint> v;
        for (const auto& p : hull)
            v.push_back({QuadRat(p.first), QuadRat(p.second)});
        try {
            return Polygon(std::move(v));
        } catch (const PreconditionError&) {
            continue; // origin inside or degenerate
        }
    }
}

// Points of <gens> inside [0, box.x] x [0, box.y], by breadth-first search.
inline std::set<IntVec2> brute_generated(const std::vector<IntVec2>& gens, IntVec2 box)
{
    std::set<IntVec2> seen{{0, 0}};
    std::vector<IntVec2> frontier{{0, 0}};
    while (!frontier.empty()) {
        std::vector<IntVec2> next;
        for (IntVec2 p : frontier)
            for (IntVec2 g : gens) {
                IntVec2 q = p + g;
                if (q.x > box.x || q.y > box.y)
                    continue;
                if (seen.insert(q).second)
                    next.push_back(q);
            }
        frontier = std::move(next);
    }
    return seen;
}

// Nonzero members of a downward-closed-enough set that are not a sum of two
// nonzero members of the same set.
inline std::vector<IntVec2> brute_irreducibles(const std::set<IntVec2>& members)
{
    std::vector<IntVec2> out;
    for (IntVec2 x : members) {
        if (x == IntVec2{0, 0})
            continue;
        bool split = false;
        for (IntVec2 y : members) {
            if (y == IntVec2{0, 0} || y == x || !leq(y, x))
                continue;
            if (members.count(x - y)) {
                split = true;
                break;
            }
        }
        if (!split)
            out.push_back(x);
    }
    return out;
}

inline std::int64_t max_norm(const std::vector<IntVec2>& pts)
{
    std::int64_t m = 0;
    for (IntVec2 p : pts)
        m = std::max(m, norm1(p));
    return m;
}

} // namespace cbsg::testing
