#include "cbsg/lattice_cone.hpp"

#include "cbsg/circle_sg.hpp"
#include "cbsg/kernels.hpp"
#include "cbsg/polygon_sg.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace cbsg {

bool Cone2::contains(IntVec2 p) const
{
    if (degenerate)
        return cross(ray_hi, p) == 0 && p.x * ray_hi.x + p.y * ray_hi.y >= 0;
    return cross(ray_lo, p) >= 0 && cross(p, ray_hi) >= 0;
}

bool Cone2::interior(IntVec2 p) const
{
    if (degenerate)
        return false;
    return cross(ray_lo, p) > 0 && cross(p, ray_hi) > 0;
}

GenSet::GenSet(std::vector<IntVec2> pts, bool is_minimal) : points(std::move(pts)), minimal(is_minimal)
{
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
}

bool GenSet::contains(IntVec2 p) const
{
    return std::binary_search(points.begin(), points.end(), p);
}

GenSet3::GenSet3(std::vector<IntVec3> pts, bool is_minimal) : points(std::move(pts)), minimal(is_minimal)
{
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
}

bool RayContact::has_rational_point() const
{
    switch (kind) {
    case Contact::empty:
        return false;
    case Contact::point:
        return near.is_rational();
    case Contact::segment:
        // a positive-length piece of a rational line through the origin
        // always contains rational points; an irrational line only has the
        // origin, which no segment here reaches
        return rational_slope;
    }
    return false;
}

RayContact make_contact(const QPoint& dir, Contact kind, const QPoint& near, const QPoint& far)
{
    RayContact c;
    c.direction = dir;
    c.kind = kind;
    c.near = near;
    c.far = far;
    if (dir.x.sign() == 0) {
        c.rational_slope = true;
        c.g = {0, 1};
    } else {
        QuadRat slope = dir.y / dir.x;
        if (slope.is_rational()) {
            c.rational_slope = true;
            const Rat& s = slope.rat_part();
            c.g = primitive(s.get_den(), s.get_num());
            if (c.g.x < 0 || (c.g.x == 0 && c.g.y < 0) || dir.x.sign() < 0)
                c.g = {-c.g.x, -c.g.y};
        }
    }
    if (c.rational_slope && kind != Contact::empty) {
        auto param = [&](const QPoint& p) {
            return c.g.x != 0 ? p.x / QuadRat(Rat(c.g.x)) : p.y / QuadRat(Rat(c.g.y));
        };
        c.alpha = param(near);
        c.beta = param(far);
    }
    return c;
}

Cone2 ConeAnalysis::cone() const
{
    if (!rational())
        throw PreconditionError("cone has an irrational extremal ray");
    Cone2 c;
    c.ray_hi = hi.g;
    c.ray_lo = lo.g;
    c.degenerate = status == ConeStatus::single_ray || c.ray_hi == c.ray_lo;
    return c;
}

ConeAnalysis cone_of_body(const ConvexBody2& body)
{
    if (const auto* c = std::get_if<Circle>(&body))
        return circle_cone(*c);
    if (const auto* p = std::get_if<Polygon>(&body))
        return polygon_cone(*p);
    const auto& s = std::get<RaySegment>(body);
    ConeAnalysis a;
    QPoint dir(s.direction);
    if (s.direction.x < 0 || s.direction.y < 0) {
        a.status = ConeStatus::empty_body;
        return a;
    }
    a.status = ConeStatus::single_ray;
    a.hi = make_contact(dir, Contact::segment, s.alpha * dir, s.beta * dir);
    a.lo = a.hi;
    return a;
}

namespace {

// Drop points that are a cone element plus another candidate. Valid when
// the candidates contain the Hilbert basis of a saturated cone inside the
// nonnegative orthant: then a reducible x is h + y with h irreducible of
// smaller coordinate sum, so checking against the basis built so far is
// enough.
template <class V>
std::int64_t degree(const V& v)
{
    if constexpr (requires { v.z; })
        return v.x + v.y + v.z;
    else
        return v.x + v.y;
}

template <class V, class InCone>
std::vector<V> reduce_saturated(std::vector<V> cand, InCone in_cone)
{
    std::sort(cand.begin(), cand.end(), [](const V& a, const V& b) {
        const auto da = degree(a), db = degree(b);
        return da != db ? da < db : a < b;
    });
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::vector<V> keep;
    for (const V& x : cand) {
        const bool reducible = std::any_of(keep.begin(), keep.end(), [&](const V& h) { return in_cone(x - h); });
        if (!reducible)
            keep.push_back(x);
    }
    std::sort(keep.begin(), keep.end());
    return keep;
}

}

GenSet hilbert_basis_2d(const Cone2& cone)
{
    if (cone.degenerate)
        return GenSet({cone.ray_hi}, true);
    const IntVec2 u = cone.ray_lo;
    const IntVec2 v = cone.ray_hi;
    const std::int64_t det = cross(u, v);
    if (det <= 0)
        throw PreconditionError("cone rays out of order");

    // lattice points lambda*u + mu*v with 0 <= lambda, mu < 1
    std::vector<IntVec2> cand{u, v};
    for (std::int64_t x = 0; x <= u.x + v.x; ++x) {
        for (std::int64_t y = 0; y <= u.y + v.y; ++y) {
            IntVec2 p{x, y};
            std::int64_t l = cross(p, v);
            std::int64_t m = cross(u, p);
            if (l >= 0 && l < det && m >= 0 && m < det && (x != 0 || y != 0))
                cand.push_back(p);
        }
    }
    auto in_cone = [&](IntVec2 d) { return (d.x != 0 || d.y != 0) && cone.contains(d); };
    return GenSet(reduce_saturated(std::move(cand), in_cone), true);
}

namespace {

using I64 = std::int64_t;

I64 dot3(IntVec3 a, IntVec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

IntVec3 cross3(IntVec3 a, IntVec3 b)
{
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

I64 det3(IntVec3 a, IntVec3 b, IntVec3 c) { return dot3(a, cross3(b, c)); }


bool is_zero(IntVec3 a) { return a.x == 0 && a.y == 0 && a.z == 0; }

IntVec3 prim3(IntVec3 a)
{
    I64 g = std::gcd(std::gcd(a.x, a.y), a.z);
    return {a.x / g, a.y / g, a.z / g};
}

// r in the planar cone spanned by a and b (a, b independent, r coplanar)
bool between(IntVec3 a, IntVec3 b, IntVec3 r)
{
    IntVec3 n = cross3(a, b);
    return dot3(cross3(a, r), n) >= 0 && dot3(cross3(r, b), n) >= 0;
}

struct Cone3 {
    int rank = 0;
    std::vector<IntVec3> extreme; // cyclic order for rank 3
    std::vector<IntVec3> normals; // facet normals (rank 3)
    IntVec3 plane;                // rank 2 normal

    bool contains(IntVec3 v) const
    {
        if (rank == 1)
            return is_zero(cross3(extreme[0], v)) && dot3(extreme[0], v) >= 0;
        if (rank == 2)
            return dot3(plane, v) == 0 && between(extreme[0], extreme[1], v);
        return std::all_of(normals.begin(), normals.end(), [&](IntVec3 n) { return dot3(n, v) >= 0; });
    }
};

Cone3 analyse_cone3(const std::vector<IntVec3>& rays)
{
    Cone3 c;
    const std::size_t n = rays.size();
    // rank
    IntVec3 n2{};
    for (std::size_t i = 0; i < n && is_zero(n2); ++i)
        for (std::size_t j = i + 1; j < n && is_zero(n2); ++j)
            n2 = cross3(rays[i], rays[j]);
    if (is_zero(n2)) {
        if (n > 1)
            throw PreconditionError("cone not pointed");
        c.rank = 1;
        c.extreme = {rays[0]};
        return c;
    }
    bool flat = std::all_of(rays.begin(), rays.end(), [&](IntVec3 r) { return dot3(n2, r) == 0; });
    if (flat) {
        c.rank = 2;
        c.plane = n2;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || is_zero(cross3(rays[i], rays[j])))
                    continue;
                bool ok = std::all_of(rays.begin(), rays.end(),
                    [&](IntVec3 r) { return between(rays[i], rays[j], r); });
                if (ok) {
                    c.extreme = {rays[i], rays[j]};
                    c.plane = cross3(rays[i], rays[j]);
                    return c;
                }
            }
        throw PreconditionError("cone not pointed");
    }

    // gift wrapping: i -> j is an edge when every ray lies on the
    // non-negative side of the plane (r_i, r_j) and coplanar rays sit
    // between them
    c.rank = 3;
    std::vector<int> next(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || is_zero(cross3(rays[i], rays[j])))
                continue;
            bool ok = true;
            for (std::size_t k = 0; k < n && ok; ++k) {
                I64 d = det3(rays[i], rays[j], rays[k]);
                if (d < 0)
                    ok = false;
                else if (d == 0 && !between(rays[i], rays[j], rays[k]))
                    ok = false;
            }
            if (ok) {
                if (next[i] != -1)
                    throw PreconditionError("cone not pointed");
                next[i] = static_cast<int>(j);
            }
        }
    }
    int start = -1;
    for (std::size_t i = 0; i < n; ++i)
        if (next[i] != -1) {
            start = static_cast<int>(i);
            break;
        }
    if (start < 0)
        throw PreconditionError("cone not pointed");
    int cur = start;
    do {
        c.extreme.push_back(rays[static_cast<std::size_t>(cur)]);
        cur = next[static_cast<std::size_t>(cur)];
        if (cur < 0 || c.extreme.size() > n)
            throw PreconditionError("cone not pointed");
    } while (cur != start);
    if (c.extreme.size() < 3)
        throw PreconditionError("cone not pointed");
    for (std::size_t i = 0; i < c.extreme.size(); ++i)
        c.normals.push_back(cross3(c.extreme[i], c.extreme[(i + 1) % c.extreme.size()]));
    return c;
}

// Nonzero lattice points of the half-open parallelepiped of a simplicial
// cone with 3 independent generators.
void parallelepiped3(IntVec3 a, IntVec3 b, IntVec3 c, std::vector<IntVec3>& out)
{
    I64 d = det3(a, b, c);
    if (d < 0) {
        std::swap(b, c);
        d = -d;
    }
    IntVec3 lo{std::min<I64>(0, a.x) + std::min<I64>(0, b.x) + std::min<I64>(0, c.x),
        std::min<I64>(0, a.y) + std::min<I64>(0, b.y) + std::min<I64>(0, c.y),
        std::min<I64>(0, a.z) + std::min<I64>(0, b.z) + std::min<I64>(0, c.z)};
    IntVec3 hi{std::max<I64>(0, a.x) + std::max<I64>(0, b.x) + std::max<I64>(0, c.x),
        std::max<I64>(0, a.y) + std::max<I64>(0, b.y) + std::max<I64>(0, c.y),
        std::max<I64>(0, a.z) + std::max<I64>(0, b.z) + std::max<I64>(0, c.z)};
    IntVec3 bc = cross3(b, c), ca = cross3(c, a), ab = cross3(a, b);
    const IntVec3 normals[3] = {bc, ca, ab};
    for (I64 x = lo.x; x <= hi.x; ++x)
        for (I64 y = lo.y; y <= hi.y; ++y) {
            // Cramer: p = (l1 a + l2 b + l3 c) / d with each l in [0, d),
            // linear in z for fixed x, y
            I64 zlo = lo.z, zhi = hi.z;
            for (const IntVec3& n : normals) {
                const I64 c0 = x * n.x + y * n.y;
                if (n.z == 0) {
                    if (c0 < 0 || c0 >= d)
                        zlo = zhi + 1;
                } else if (n.z > 0) {
                    zlo = std::max(zlo, ceil_div(-c0, n.z));
                    zhi = std::min(zhi, floor_div(d - 1 - c0, n.z));
                } else {
                    zlo = std::max(zlo, ceil_div(d - 1 - c0, n.z));
                    zhi = std::min(zhi, floor_div(-c0, n.z));
                }
            }
            for (I64 z = zlo; z <= zhi; ++z)
                if (x != 0 || y != 0 || z != 0)
                    out.push_back({x, y, z});
        }
}

void parallelogram3(IntVec3 a, IntVec3 b, std::vector<IntVec3>& out)
{
    IntVec3 n = cross3(a, b);
    // walk the two coordinates whose minor is nonzero, solve the third
    auto comp = [](IntVec3 v, int k) { return k == 0 ? v.x : (k == 1 ? v.y : v.z); };
    int ka = 0, kb = 1, kc = 2;
    if (n.z == 0) {
        if (n.y != 0) {
            ka = 0; kb = 2; kc = 1;
        } else {
            ka = 1; kb = 2; kc = 0;
        }
    }
    I64 m = comp(a, ka) * comp(b, kb) - comp(a, kb) * comp(b, ka);
    I64 nc = comp(n, kc);
    I64 na = comp(n, ka), nb = comp(n, kb);
    I64 sgn = m < 0 ? -1 : 1;
    I64 am = m * sgn;
    I64 loa = std::min<I64>(0, comp(a, ka)) + std::min<I64>(0, comp(b, ka));
    I64 hia = std::max<I64>(0, comp(a, ka)) + std::max<I64>(0, comp(b, ka));
    I64 lob = std::min<I64>(0, comp(a, kb)) + std::min<I64>(0, comp(b, kb));
    I64 hib = std::max<I64>(0, comp(a, kb)) + std::max<I64>(0, comp(b, kb));
    for (I64 pa = loa; pa <= hia; ++pa)
        for (I64 pb = lob; pb <= hib; ++pb) {
            I64 num = -(na * pa + nb * pb);
            if (num % nc != 0)
                continue;
            I64 pc = num / nc;
            if (pa == 0 && pb == 0 && pc == 0)
                continue;
            I64 l1 = (pa * comp(b, kb) - pb * comp(b, ka)) * sgn;
            I64 l2 = (comp(a, ka) * pb - comp(a, kb) * pa) * sgn;
            if (l1 < 0 || l1 >= am || l2 < 0 || l2 >= am)
                continue;
            IntVec3 p{};
            auto set = [&](int k, I64 v) { (k == 0 ? p.x : (k == 1 ? p.y : p.z)) = v; };
            set(ka, pa);
            set(kb, pb);
            set(kc, pc);
            out.push_back(p);
        }
}

}

GenSet3 hilbert_basis_3d(const std::vector<IntVec3>& input)
{
    std::vector<IntVec3> rays;
    for (IntVec3 r : input) {
        if (is_zero(r))
            continue;
        if (r.x < 0 || r.y < 0 || r.z < 0)
            throw PreconditionError("rays must lie in the closed positive octant");
        rays.push_back(prim3(r));
    }
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    if (rays.empty())
        return GenSet3({}, true);

    Cone3 cone = analyse_cone3(rays);
    std::vector<IntVec3> cand = cone.extreme;
    if (cone.rank == 2) {
        parallelogram3(cone.extreme[0], cone.extreme[1], cand);
    } else if (cone.rank == 3) {
        for (std::size_t k = 1; k + 1 < cone.extreme.size(); ++k)
            parallelepiped3(cone.extreme[0], cone.extreme[k], cone.extreme[k + 1], cand);
    }
    auto in_cone = [&](IntVec3 d) { return !is_zero(d) && cone.contains(d); };
    return GenSet3(reduce_saturated(std::move(cand), in_cone), true);
}

GenSet project_to_plane(const GenSet3& g)
{
    std::vector<IntVec2> pts;
    for (IntVec3 p : g.points)
        if (p.x != 0 || p.y != 0)
            pts.push_back({p.x, p.y});
    return minimalize(pts);
}

GenSet project_to_plane(const GenSet3& g, const std::vector<IntVec3>& rays)
{
    std::vector<IntVec3> prim;
    for (IntVec3 r : rays)
        if (!is_zero(r))
            prim.push_back(prim3(r));
    std::sort(prim.begin(), prim.end());
    prim.erase(std::unique(prim.begin(), prim.end()), prim.end());
    if (prim.empty())
        return GenSet({}, true);
    const Cone3 cone = analyse_cone3(prim);
    if (cone.rank < 3)
        return project_to_plane(g);

    // (x, y) is in the projected monoid iff n.(x, y, z) >= 0 on every facet
    // for some integer z
    auto projected_member = [&](IntVec2 p) {
        I64 zlo = std::numeric_limits<I64>::min(), zhi = std::numeric_limits<I64>::max();
        for (const IntVec3& n : cone.normals) {
            const I64 c0 = n.x * p.x + n.y * p.y;
            if (n.z > 0)
                zlo = std::max(zlo, ceil_div(-c0, n.z));
            else if (n.z < 0)
                zhi = std::min(zhi, floor_div(-c0, n.z));
            else if (c0 < 0)
                return false;
        }
        return zlo <= zhi;
    };
    std::vector<IntVec2> pts;
    for (IntVec3 p : g.points)
        if (p.x != 0 || p.y != 0)
            pts.push_back({p.x, p.y});
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<IntVec2> keep;
    for (IntVec2 x : pts) {
        const bool reducible = std::any_of(pts.begin(), pts.end(),
            [&](IntVec2 h) { return h != x && leq(h, x) && projected_member(x - h); });
        if (!reducible)
            keep.push_back(x);
    }
    return GenSet(std::move(keep), true);
}

GenSet minimalize(const std::vector<IntVec2>& input)
{
    std::vector<IntVec2> pts;
    IntVec2 box{0, 0};
    for (IntVec2 p : input) {
        if (p.x < 0 || p.y < 0)
            throw PreconditionError("minimalize needs points of N^2, got " + to_string(p));
        if (p.x == 0 && p.y == 0)
            continue;
        pts.push_back(p);
        box.x = std::max(box.x, p.x);
        box.y = std::max(box.y, p.y);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.empty())
        return GenSet({}, true);

    const kernels::ReachTable reach = kernels::reachability(pts, box);
    std::vector<IntVec2> keep;
    for (IntVec2 x : pts) {
        bool reducible = false;
        for (IntVec2 g : pts) {
            if (g == x || !leq(g, x))
                continue;
            if (reach.at(x - g)) {
                reducible = true;
                break;
            }
        }
        if (!reducible)
            keep.push_back(x);
    }
    return GenSet(std::move(keep), true);
}

bool member_of_generated(IntVec2 x, const GenSet& gens)
{
    if (x.x < 0 || x.y < 0)
        return false;
    if (x.x == 0 && x.y == 0)
        return true;
    std::vector<IntVec2> g;
    for (IntVec2 v : gens.points)
        if (leq(v, x) && (v.x != 0 || v.y != 0))
            g.push_back(v);
    std::sort(g.begin(), g.end(), [](IntVec2 a, IntVec2 b) { return norm1(a) > norm1(b); });
    return kernels::reachability(g, x).at(x);
}

} // namespace cbsg
