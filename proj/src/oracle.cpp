#include "cbsg/oracle.hpp"

#include "cbsg/kernels.hpp"

#include <algorithm>

namespace cbsg::oracle {

namespace {

Int isqrt_ceil(const Int& n)
{
    Int s = sqrt(n);
    if (s * s < n)
        ++s;
    return s;
}

}

DilationBody circle_body(const Circle& C)
{
    DilationBody b;
    b.name = "circle";
    b.in_dilate = [C](IntVec2 X, const Int& i) {
        Rat dx = Rat(X.x) - C.a * i;
        Rat dy = Rat(X.y) - C.b * i;
        return dx * dx + dy * dy <= C.r * C.r * i * i;
    };
    b.window = [C](IntVec2 X) {
        // |X - i c|^2 <= i^2 r^2  <=>  |X|^2 - 2i c.X + i^2 (N - r^2) <= 0
        IndexWindow w;
        const Rat N = C.a * C.a + C.b * C.b;
        const Rat slack = N - C.r * C.r;
        const Rat cx = C.a * X.x + C.b * X.y;
        if (sgn(slack) < 0) {
            w.settled = true;
        } else if (sgn(slack) == 0) {
            w.settled = sgn(cx) > 0;
        } else if (sgn(cx) <= 0) {
            w.settled = false;
        } else {
            // the roots (cx -+ sqrt(disc)) / slack bracket the admissible i;
            // bracket sqrt(disc) by consecutive integers and widen
            const Rat disc = cx * cx - slack * Rat(X.x * X.x + X.y * X.y);
            if (sgn(disc) < 0) {
                w.settled = false;
                return w;
            }
            const Int t = rat_floor_sqrt(disc);
            w.lo = std::max(Int(1), ceil_rat((cx - Rat(t + 1)) / slack));
            w.hi = floor_rat((cx + Rat(t + 1)) / slack);
        }
        return w;
    };
    return b;
}

DilationBody polygon_body(const Polygon& F)
{
    DilationBody b;
    b.name = "polygon";
    QuadRat lo = F[0].x + F[0].y, hi = lo;
    for (const QPoint& p : F.vertices()) {
        lo = min(lo, p.x + p.y);
        hi = max(hi, p.x + p.y);
    }
    b.in_dilate = [F](IntVec2 X, const Int& i) {
        const QuadRat inv{Rat(1) / Rat(i)};
        return F.contains(inv * QPoint(X));
    };
    // Vertices run clockwise, so X / i lies in F iff for every edge e from
    // a: cross(e, X) <= i * cross(e, a). Each edge bounds i on one side.
    struct Edge {
        QPoint e;
        QuadRat c;
    };
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < F.size(); ++k) {
        const QPoint e = F[k + 1] - F[k];
        edges.push_back({e, cross(e, F[k])});
    }
    // x + y ranges over [lo, hi] on F
    b.window = [lo, hi, edges](IntVec2 X) {
        IndexWindow w;
        const QuadRat s{Rat(X.x + X.y)};
        w.lo = std::max(Int(1), (s / hi).ceil());
        w.hi = (s / lo).floor();
        const QuadRat x{Rat(X.x)}, y{Rat(X.y)};
        for (const Edge& E : edges) {
            const QuadRat A = E.e.x * y - E.e.y * x;
            const int sc = E.c.sign();
            if (sc > 0)
                w.lo = std::max(w.lo, (A / E.c).ceil());
            else if (sc < 0)
                w.hi = std::min(w.hi, (A / E.c).floor());
            else if (A.sign() > 0)
                w.hi = w.lo - 1;
            if (w.hi < w.lo)
                break;
        }
        return w;
    };
    return b;
}

DilationBody segment_body(const RaySegment& S)
{
    DilationBody b;
    b.name = "segment";
    auto param = [S](IntVec2 X) -> std::optional<Rat> {
        const IntVec2 g = S.direction;
        if (cross(g, X) != 0)
            return std::nullopt;
        Rat t = g.x != 0 ? Rat(X.x, g.x) : Rat(X.y, g.y);
        if (sgn(t) <= 0)
            return std::nullopt;
        return t;
    };
    b.in_dilate = [S, param](IntVec2 X, const Int& i) {
        auto t = param(X);
        if (!t)
            return false;
        const QuadRat I{Rat(i)};
        const QuadRat T{*t};
        return I * S.alpha <= T && T <= I * S.beta;
    };
    b.window = [S, param](IntVec2 X) {
        IndexWindow w;
        auto t = param(X);
        if (!t) {
            w.settled = false;
            return w;
        }
        const QuadRat T{*t};
        if (S.alpha.sign() == 0) {
            w.settled = true;
            return w;
        }
        w.lo = std::max(Int(1), (T / S.beta).ceil());
        w.hi = (T / S.alpha).floor();
        return w;
    };
    return b;
}

DilationBody annulus_body(const Rat& r_in, const Rat& r_out)
{
    if (sgn(r_in) <= 0 || r_out < r_in)
        throw PreconditionError("annulus radii out of order");
    DilationBody b;
    b.name = "annulus";
    b.in_dilate = [r_in, r_out](IntVec2 X, const Int& i) {
        Rat n2 = Rat(X.x * X.x + X.y * X.y);
        Rat i2 = Rat(i * i);
        return r_in * r_in * i2 <= n2 && n2 <= r_out * r_out * i2;
    };
    b.window = [r_in, r_out](IntVec2 X) {
        IndexWindow w;
        const Int n2 = X.x * X.x + X.y * X.y;
        // i <= |X| / r_in, i >= |X| / r_out, widened to integers
        w.hi = floor_rat(Rat(isqrt_ceil(n2)) / r_in);
        w.lo = std::max(Int(1), floor_rat(Rat(sqrt(Int(n2))) / r_out));
        return w;
    };
    return b;
}

DilationBody empty_body()
{
    DilationBody b;
    b.name = "empty";
    b.in_dilate = [](IntVec2, const Int&) { return false; };
    b.window = [](IntVec2) {
        IndexWindow w;
        w.settled = false;
        return w;
    };
    return b;
}

DilationBody from_body(const ConvexBody2& body)
{
    struct Visit {
        DilationBody operator()(const Circle& c) const { return circle_body(c); }
        DilationBody operator()(const Polygon& p) const { return polygon_body(p); }
        DilationBody operator()(const RaySegment& s) const { return segment_body(s); }
    };
    return std::visit(Visit{}, body);
}

bool dilation_member(std::int64_t x, std::int64_t y, const DilationBody& body)
{
    if (x < 0 || y < 0)
        throw PreconditionError("dilation_member needs x, y >= 0");
    if (x == 0 && y == 0)
        return true;
    const IntVec2 X{x, y};
    const IndexWindow w = body.window(X);
    if (w.settled)
        return *w.settled;
    for (Int i = w.lo; i <= w.hi; ++i)
        if (body.in_dilate(X, i))
            return true;
    return false;
}

std::vector<IntVec2> enumerate_members(const DilationBody& body, std::int64_t norm_bound)
{
    if (norm_bound < 0)
        throw PreconditionError("negative norm bound");
    return kernels::scan_simplex(norm_bound, [&](IntVec2 p) { return dilation_member(p.x, p.y, body); });
}

GenSet naive_min_gens(const DilationBody& body, std::int64_t norm_bound)
{
    const std::vector<IntVec2> members = enumerate_members(body, norm_bound);
    const std::int64_t n = norm_bound;
    std::vector<std::uint8_t> in(static_cast<std::size_t>((n + 1) * (n + 1)), 0);
    auto at = [&](IntVec2 p) { return static_cast<std::size_t>(p.x * (n + 1) + p.y); };
    for (IntVec2 p : members)
        in[at(p)] = 1;

    std::vector<std::uint8_t> keep(members.size(), 0);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::size_t k = 0; k < members.size(); ++k) {
        const IntVec2 X = members[k];
        if (X.x == 0 && X.y == 0)
            continue;
        bool split = false;
        // one part of a split has at most half the norm of X
        const std::int64_t half = (X.x + X.y) / 2;
        for (std::int64_t a = 0; a <= X.x && !split; ++a)
            for (std::int64_t b = 0; b <= X.y && a + b <= half && !split; ++b) {
                const IntVec2 Y{a, b};
                if (Y == IntVec2{0, 0} || Y == X)
                    continue;
                split = in[at(Y)] && in[at(X - Y)];
            }
        keep[k] = !split;
    }
    std::vector<IntVec2> gens;
    for (std::size_t k = 0; k < members.size(); ++k)
        if (keep[k])
            gens.push_back(members[k]);
    return GenSet(std::move(gens), true);
}

} // namespace cbsg::oracle
