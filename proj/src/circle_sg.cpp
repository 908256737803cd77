#include "cbsg/circle_sg.hpp"

#include "cbsg/kernels.hpp"
#include "cbsg/ray_semigroups.hpp"

#include <algorithm>

namespace cbsg {

const char* verdict_name(FgVerdict v)
{
    switch (v) {
    case FgVerdict::finitely_generated:
        return "FINITELY_GENERATED";
    case FgVerdict::not_finitely_generated:
        return "NOT_FINITELY_GENERATED";
    case FgVerdict::trivial_zero:
        return "ZERO";
    case FgVerdict::full_cone:
        return "FULL_CONE";
    }
    return "?";
}

namespace {

// Tangent data for a circle seen from an outside origin.
struct Tangents {
    Rat N;  // |c|^2
    Rat L2; // squared tangent length
    QuadRat L;
    QPoint T1; // larger slope
    QPoint T2;
};

Tangents tangents(const Circle& C)
{
    Tangents t;
    t.N = C.a * C.a + C.b * C.b;
    t.L2 = t.N - C.r * C.r;
    t.L = QuadRat::sqrt_of(t.L2);
    const QuadRat L2(t.L2), a(C.a), b(C.b), r(C.r), N(t.N);
    const QuadRat Lr = t.L * r;
    t.T1 = {(L2 * a - Lr * b) / N, (L2 * b + Lr * a) / N};
    t.T2 = {(L2 * a + Lr * b) / N, (L2 * b - Lr * a) / N};
    return t;
}

QPoint origin() { return QPoint(IntVec2{0, 0}); }

}

ConeAnalysis circle_cone(const Circle& C)
{
    const Rat& a = C.a;
    const Rat& b = C.b;
    const Rat r2 = C.r * C.r;
    const Rat N = a * a + b * b;
    const QPoint ex(IntVec2{1, 0});
    const QPoint ey(IntVec2{0, 1});
    ConeAnalysis an;

    if (N < r2 || (N == r2 && sgn(a) > 0 && sgn(b) > 0)) {
        // origin in the disc: the disc reaches out along both axes
        an.status = ConeStatus::full_quadrant;
        QuadRat ytop = QuadRat(b) + QuadRat::sqrt_of(r2 - a * a);
        QuadRat xtop = QuadRat(a) + QuadRat::sqrt_of(r2 - b * b);
        an.hi = make_contact(ey, Contact::segment, origin(), {QuadRat(), ytop});
        an.lo = make_contact(ex, Contact::segment, origin(), {xtop, QuadRat()});
        return an;
    }
    if (N == r2)
        throw PreconditionError("origin on the circle with the centre outside the open quadrant is not supported");

    const bool y_hit = sgn(b) > 0 && a * a <= r2;
    const bool x_hit = sgn(a) > 0 && b * b <= r2;

    if (x_hit && sgn(b) < 0 && b * b == r2) {
        an.status = ConeStatus::single_ray;
        QPoint p{QuadRat(a), QuadRat()};
        an.hi = an.lo = make_contact(ex, Contact::point, p, p);
        return an;
    }
    if (y_hit && sgn(a) < 0 && a * a == r2) {
        an.status = ConeStatus::single_ray;
        QPoint p{QuadRat(), QuadRat(b)};
        an.hi = an.lo = make_contact(ey, Contact::point, p, p);
        return an;
    }
    if (!x_hit && !y_hit && !(sgn(a) > 0 && sgn(b) > 0)) {
        an.status = ConeStatus::empty_body;
        return an;
    }

    const Tangents t = tangents(C);
    if (y_hit) {
        if (a * a == r2) {
            QPoint p{QuadRat(), QuadRat(b)};
            an.hi = make_contact(ey, Contact::point, p, p);
        } else {
            QuadRat s = QuadRat::sqrt_of(r2 - a * a);
            an.hi = make_contact(ey, Contact::segment, {QuadRat(), QuadRat(b) - s}, {QuadRat(), QuadRat(b) + s});
        }
    } else {
        an.hi = make_contact(t.T1, Contact::point, t.T1, t.T1);
    }
    if (x_hit) {
        if (b * b == r2) {
            QPoint p{QuadRat(a), QuadRat()};
            an.lo = make_contact(ex, Contact::point, p, p);
        } else {
            QuadRat s = QuadRat::sqrt_of(r2 - b * b);
            an.lo = make_contact(ex, Contact::segment, {QuadRat(a) - s, QuadRat()}, {QuadRat(a) + s, QuadRat()});
        }
    } else {
        an.lo = make_contact(t.T2, Contact::point, t.T2, t.T2);
    }
    an.status = ConeStatus::proper;
    return an;
}

FgDecision circle_fg_decision(const Circle& C)
{
    const ConeAnalysis an = circle_cone(C);
    switch (an.status) {
    case ConeStatus::empty_body:
        return {FgVerdict::trivial_zero, "the disc misses the closed first quadrant"};
    case ConeStatus::full_quadrant:
        return {FgVerdict::full_cone, "the origin lies in the disc"};
    case ConeStatus::single_ray:
        return {FgVerdict::finitely_generated, "the disc meets the quadrant only at " + to_string(an.hi.near)};
    case ConeStatus::proper:
        break;
    }
    const bool hi_ok = an.hi.has_rational_point();
    const bool lo_ok = an.lo.has_rational_point();
    if (hi_ok && lo_ok)
        return {FgVerdict::finitely_generated, ""};
    std::string w;
    if (!hi_ok)
        w = "tau_1 meets the disc only at the irrational point " + to_string(an.hi.near);
    if (!lo_ok) {
        if (!w.empty())
            w += "; ";
        w += "tau_2 meets the disc only at the irrational point " + to_string(an.lo.near);
    }
    return {FgVerdict::not_finitely_generated, w};
}

RayData ray_data_of(const RayContact& c)
{
    RayData d;
    d.g = c.g;
    if (c.kind == Contact::point) {
        // near = t*g with t = p/q in lowest terms: the first lattice point
        // on the ray among the multiples of near is p*g
        d.point = true;
        d.lambdas = {to_i64(c.alpha.rat_part().get_num())};
    } else {
        d.lambdas = interval_semigroup_gens(c.alpha, c.beta).gens;
    }
    return d;
}

namespace {

std::optional<QuadRat> height(std::int64_t i, const Rat& L2, const Rat& r)
{
    Rat R = 4 * r * r * Rat(i) * Rat(i + 1) - L2;
    if (sgn(R) < 0)
        return std::nullopt;
    QuadRat num = QuadRat(r * Rat(2 * i + 1)) - QuadRat::sqrt_of(R);
    return QuadRat(L2) * num / QuadRat(2 * (L2 + r * r));
}

template <class Pred>
std::int64_t least_index(Pred pred)
{
    std::int64_t hi = 1;
    while (!pred(hi)) {
        if (hi > (std::int64_t(1) << 40))
            throw PreconditionError("stabilization index out of range");
        hi *= 2;
    }
    std::int64_t lo = hi / 2; // pred(lo) false unless lo == 0
    while (hi - lo > 1) {
        std::int64_t mid = lo + (hi - lo) / 2;
        if (pred(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

}

bool circle_member(std::int64_t x, std::int64_t y, const Circle& C)
{
    if (x < 0 || y < 0)
        return false;
    if (x == 0 && y == 0)
        return true;
    const Rat X(x), Y(y);
    const Rat N = C.a * C.a + C.b * C.b;
    auto in_disc = [&](const Int& i) {
        if (i < 1)
            return false;
        Rat I(i);
        Rat dx = X - I * C.a, dy = Y - I * C.b, rr = I * C.r;
        return dx * dx + dy * dy <= rr * rr;
    };
    // the two dilations whose centres straddle |X|
    if (sgn(N) > 0) {
        Int k = rat_floor_sqrt((X * X + Y * Y) / N);
        if (in_disc(k) || in_disc(k + 1))
            return true;
    }
    // close to a tangent ray the admissible dilations drift away from
    // |X|/|c|, so settle it on the exact window of i
    const Rat L2 = N - C.r * C.r;
    const Rat cx = C.a * X + C.b * Y;
    if (sgn(L2) < 0)
        return true;
    if (sgn(L2) == 0)
        return sgn(cx) > 0;
    const Rat disc = cx * cx - L2 * (X * X + Y * Y);
    if (sgn(disc) < 0 || sgn(cx) <= 0)
        return false;
    const QuadRat s = QuadRat::sqrt_of(disc);
    const QuadRat lo = (QuadRat(cx) - s) / QuadRat(L2);
    const QuadRat hi = (QuadRat(cx) + s) / QuadRat(L2);
    Int i = lo.ceil();
    if (i < 1)
        i = 1;
    return QuadRat(Rat(i)) <= hi;
}

std::optional<QuadRat> overlap_height(std::int64_t i, const Circle& C)
{
    if (i < 1)
        throw PreconditionError("dilation index must be positive");
    const ConeAnalysis an = circle_cone(C);
    if (an.status != ConeStatus::proper)
        throw PreconditionError("overlap height needs a circle away from the origin with two extremal rays");
    if (an.lo.kind != Contact::point)
        throw PreconditionError("height undefined for chord rays");
    const Rat N = C.a * C.a + C.b * C.b;
    return height(i, N - C.r * C.r, C.r);
}

Stabilization stabilization(const Circle& C)
{
    const ConeAnalysis an = circle_cone(C);
    const FgDecision fg = circle_fg_decision(C);
    const Rat N = C.a * C.a + C.b * C.b;
    Stabilization st;
    auto d_sq = [&](std::int64_t i0) {
        // (i0 (|c| + r))^2
        QuadRat s = QuadRat::sqrt_of(N) + QuadRat(C.r);
        return QuadRat(Rat(i0 * i0)) * s * s;
    };
    if (fg.verdict == FgVerdict::full_cone) {
        st.d_prime_sq = Rat(1, 4);
        st.i0 = 1;
        st.d_sq = d_sq(1);
        return st;
    }
    if (fg.verdict != FgVerdict::finitely_generated || an.status != ConeStatus::proper)
        throw PreconditionError("stabilization needs a finitely generated circle with two extremal rays");

    auto dprime = [](IntVec2 g) -> Rat { return Rat(1) / Rat(4 * (g.x * g.x + g.y * g.y)); };
    st.d_prime_sq = std::min(dprime(an.hi.g), dprime(an.lo.g));

    const Rat L2 = N - C.r * C.r;
    std::int64_t chord_from = 1;
    bool tangent = false;
    for (const RayContact* c : {&an.hi, &an.lo}) {
        if (c->kind == Contact::point)
            tangent = true;
        else
            chord_from = std::max(chord_from, overlap_index(c->alpha, c->beta));
    }
    // both tangent rays see the same heights (reflection in the centre line)
    auto ok = [&](std::int64_t i) {
        if (i < chord_from)
            return false;
        if (!tangent)
            return true;
        auto h = height(i, L2, C.r);
        return h && (*h * *h) < QuadRat(st.d_prime_sq);
    };
    st.i0 = least_index(ok);
    st.d_sq = d_sq(st.i0);
    return st;
}

CircleAnalysis analyze_circle(const Circle& C)
{
    const FgDecision fg = circle_fg_decision(C);
    if (fg.verdict == FgVerdict::not_finitely_generated)
        throw PreconditionError("not finitely generated: " + fg.witness);
    CircleAnalysis an;
    an.rays = circle_cone(C);
    if (an.rays.status != ConeStatus::proper && an.rays.status != ConeStatus::full_quadrant)
        throw PreconditionError("circle analysis needs two extremal rays");
    an.cone = an.rays.cone();
    an.hilbert = hilbert_basis_2d(an.cone);
    an.hi = ray_data_of(an.rays.hi);
    an.lo = ray_data_of(an.rays.lo);
    an.stab = stabilization(C);
    return an;
}

GenSet sprime_generators(const Circle&, const CircleAnalysis& an)
{
    GenSet S = an.hilbert;
    for (const RayData* d : {&an.hi, &an.lo}) {
        if (d->lambdas == std::vector<std::int64_t>{1})
            continue;
        RaySurgerySpec spec{d->g, d->g, {}};
        for (std::int64_t lam : d->lambdas)
            spec.s_list.push_back(lam * d->g);
        S = replace_ray_gens(S, spec);
    }
    return S;
}

namespace {

IntVec2 floor_box(const std::vector<QPoint>& pts)
{
    IntVec2 box{0, 0};
    for (const QPoint& p : pts) {
        box.x = std::max(box.x, to_i64(p.x.floor()));
        box.y = std::max(box.y, to_i64(p.y.floor()));
    }
    return box;
}

}

// A lattice point X strictly inside the cone is in the semigroup as soon as
// |X| >= t_lo t_hi / (t_hi - t_lo), where [t_lo, t_hi] is the chord the
// disc cuts on the line OX. With q1, q2 the distances from X to the two
// tangent lines, r^2|X|^2 - (X x c)^2 = |c|^2 q1 q2, so the misses satisfy
// cross(T2,X) * cross(X,T1) < L^6 / (4|c|^2). Each factor has a positive
// floor on the interior lattice points, which bounds c.X.
std::vector<IntVec2> exceptional_set(const Circle& C, const CircleAnalysis& an, const GenSet& sprime)
{
    if (an.rays.status == ConeStatus::full_quadrant)
        return {};
    const Tangents t = tangents(C);
    const QuadRat K(t.L2 * t.L2 * t.L2 / (4 * t.N));
    const Cone2& cone = an.cone;
    auto A = [&](const QPoint& X) { return cross(t.T2, X); };
    auto B = [&](const QPoint& X) { return cross(X, t.T1); };

    QuadRat a_min, b_min;
    if (an.rays.lo.kind == Contact::point)
        a_min = an.rays.lo.alpha;
    else
        a_min = A({QuadRat(Rat(cone.ray_hi.x, cone.ray_hi.y)), QuadRat(1)});
    if (an.rays.hi.kind == Contact::point)
        b_min = an.rays.hi.alpha;
    else
        b_min = B({QuadRat(1), QuadRat(Rat(cone.ray_lo.y, cone.ray_lo.x))});
    if (a_min.sign() <= 0 || b_min.sign() <= 0)
        throw PreconditionError("internal: non-positive distance floor");

    const QuadRat s_max = K / b_min + K / a_min;
    const QuadRat a(C.a), b(C.b);
    const QuadRat R = s_max * QuadRat(t.N) / (QuadRat(2) * t.L * QuadRat(C.r));
    auto along = [&](IntVec2 g) {
        QPoint G(g);
        QuadRat cg = a * G.x + b * G.y;
        return (R / cg) * G;
    };
    const IntVec2 box = floor_box({along(cone.ray_hi), along(cone.ray_lo)});

    // A*B is concave along a column, so the region A*B < K is a run at
    // each end of the column's interior part; walk in from both ends.
    auto column = [&](std::int64_t x) {
        std::vector<IntVec2> out;
        std::int64_t lo = floor_div(x * cone.ray_lo.y, cone.ray_lo.x) + 1;
        std::int64_t hi = cone.ray_hi.x > 0 ? ceil_div(x * cone.ray_hi.y, cone.ray_hi.x) - 1 : box.y;
        lo = std::max<std::int64_t>(lo, 0);
        hi = std::min(hi, box.y);
        auto near = [&](std::int64_t y) {
            QPoint X(IntVec2{x, y});
            return A(X) * B(X) < K;
        };
        auto take = [&](std::int64_t y) {
            if (cone.interior({x, y}) && !circle_member(x, y, C))
                out.push_back({x, y});
        };
        std::int64_t y = lo;
        for (; y <= hi && near(y); ++y)
            take(y);
        std::vector<IntVec2> top;
        std::swap(out, top);
        for (std::int64_t z = hi; z >= y && near(z); --z)
            take(z);
        std::reverse(out.begin(), out.end());
        top.insert(top.end(), out.begin(), out.end());
        return top;
    };
    // Interior lattice points off both rays already lie in <sprime>, so
    // every candidate is a point of sprime's monoid missing from S.
    (void)sprime;
    return kernels::scan_rows(box.x, column);
}

std::vector<IntVec2> exceptional_set_triangle(const Circle& C, const CircleAnalysis& an, const GenSet& sprime)
{
    if (an.rays.hi.kind != Contact::point || an.rays.lo.kind != Contact::point)
        throw PreconditionError("triangle region needs two tangent rays");
    const QuadRat i0{Rat(an.stab.i0)};
    const QPoint P = i0 * an.rays.hi.near;
    const QPoint Q = i0 * an.rays.lo.near;
    const IntVec2 box = floor_box({P, Q});
    auto cand = kernels::scan_box(box, [&](IntVec2 p) {
        if (!an.cone.interior(p))
            return false;
        // on the origin side of the segment PQ
        if (cross(Q - P, QPoint(p) - P).sign() > 0)
            return false;
        return !circle_member(p.x, p.y, C);
    });
    (void)sprime;
    return cand;
}

GenSet circle_min_gens(const Circle& C)
{
    const FgDecision fg = circle_fg_decision(C);
    switch (fg.verdict) {
    case FgVerdict::not_finitely_generated:
        throw PreconditionError("not finitely generated: " + fg.witness);
    case FgVerdict::trivial_zero:
        return GenSet({}, true);
    case FgVerdict::full_cone:
        return GenSet({{0, 1}, {1, 0}}, true);
    case FgVerdict::finitely_generated:
        break;
    }
    const ConeAnalysis rays = circle_cone(C);
    if (rays.status == ConeStatus::single_ray) {
        RayData d = ray_data_of(rays.hi);
        return GenSet({d.lambdas.front() * d.g}, true);
    }
    const CircleAnalysis an = analyze_circle(C);
    const GenSet sprime = sprime_generators(C, an);
    return remove_finite_set(sprime, exceptional_set(C, an, sprime));
}

bool circle_modular_inequality(std::int64_t x, std::int64_t y, const Circle& C)
{
    if (x == 0 && y == 0)
        throw PreconditionError("the inequality is stated for nonzero points");
    const Rat X(x), Y(y);
    const Rat n2 = X * X + Y * Y;
    const Rat cx = C.a * X + C.b * Y;
    const Rat w = C.b * X - C.a * Y;
    const Rat rho = C.r * C.r * n2 - w * w;
    if (sgn(rho) <= 0)
        throw PreconditionError("ray outside body");
    // chord endpoints along OX in units of |X|
    const QuadRat s = QuadRat::sqrt_of(rho);
    const QuadRat dP = (QuadRat(cx) - s) / QuadRat(n2);
    const QuadRat dQ = (QuadRat(cx) + s) / QuadRat(n2);
    if (dQ.sign() <= 0)
        throw PreconditionError("ray outside body");
    if (dP.sign() <= 0)
        return true; // the chord starts at the origin
    return modular_inequality_holds(QuadRat(1), dP, dQ);
}

BoundInputs circle_bound_inputs(const Circle& C)
{
    const FgDecision fg = circle_fg_decision(C);
    if (fg.verdict == FgVerdict::full_cone)
        return {Int(1), Int(1), 0};
    if (fg.verdict != FgVerdict::finitely_generated)
        throw PreconditionError(std::string("no bound for a ") + verdict_name(fg.verdict) + " circle");
    if (circle_cone(C).status != ConeStatus::proper)
        throw PreconditionError("bound needs two extremal rays");
    const CircleAnalysis an = analyze_circle(C);
    const GenSet sprime = sprime_generators(C, an);
    BoundInputs b;
    std::int64_t M = 0;
    for (IntVec2 g : an.hilbert.points)
        M = std::max(M, norm1(g));
    std::int64_t k = 1;
    for (const RayData* d : {&an.hi, &an.lo})
        k = std::max(k, *std::max_element(d->lambdas.begin(), d->lambdas.end()));
    b.M = M;
    b.k = k;
    b.l = static_cast<std::int64_t>(exceptional_set(C, an, sprime).size());
    return b;
}

} // namespace cbsg
