#include "cbsg/polygon_sg.hpp"

#include "cbsg/kernels.hpp"
#include "cbsg/ray_semigroups.hpp"

#include <algorithm>
#include <numeric>

namespace cbsg {

namespace {

std::size_t index_of(const Polygon& F, const QPoint& p)
{
    for (std::size_t i = 0; i < F.size(); ++i)
        if (F[i] == p)
            return i;
    throw PreconditionError("point is not a vertex: " + to_string(p));
}

// vertices on the extremal ray at the largest (sign = 1) or smallest
// (sign = -1) angle
std::vector<QPoint> extremal(const Polygon& F, int sign)
{
    std::size_t best = 0;
    for (std::size_t i = 1; i < F.size(); ++i)
        if (cross(F[best], F[i]).sign() * sign > 0)
            best = i;
    std::vector<QPoint> out;
    for (std::size_t i = 0; i < F.size(); ++i)
        if (cross(F[best], F[i]).sign() == 0)
            out.push_back(F[i]);
    return out;
}

RayContact contact_of(const std::vector<QPoint>& pts)
{
    if (pts.size() == 1)
        return make_contact(pts[0], Contact::point, pts[0], pts[0]);
    const QPoint& a = pts[0];
    const QPoint& b = pts[1];
    if (norm2(a) < norm2(b))
        return make_contact(a, Contact::segment, a, b);
    return make_contact(a, Contact::segment, b, a);
}

// Sutherland-Hodgman against the half-plane cross(d, X) >= 0 (keep_left)
// or <= 0.
std::vector<QPoint> clip(const std::vector<QPoint>& poly, const QPoint& d, bool keep_left)
{
    std::vector<QPoint> out;
    const std::size_t n = poly.size();
    auto side = [&](const QPoint& p) {
        int s = cross(d, p).sign();
        return keep_left ? s : -s;
    };
    for (std::size_t i = 0; i < n; ++i) {
        const QPoint& P = poly[i];
        const QPoint& Q = poly[(i + 1) % n];
        int sp = side(P), sq = side(Q);
        if (sp >= 0)
            out.push_back(P);
        if ((sp > 0 && sq < 0) || (sp < 0 && sq > 0)) {
            QuadRat cp = cross(d, P), cq = cross(d, Q);
            QuadRat t = cp / (cp - cq);
            out.push_back(P + t * (Q - P));
        }
    }
    std::vector<QPoint> dedup;
    for (const QPoint& p : out)
        if (dedup.empty() || !(dedup.back() == p))
            dedup.push_back(p);
    while (dedup.size() > 1 && dedup.front() == dedup.back())
        dedup.pop_back();
    return dedup;
}

Polygon swapped(const Polygon& F)
{
    std::vector<QPoint> v;
    for (const QPoint& p : F.vertices())
        v.push_back({p.y, p.x});
    return Polygon(std::move(v));
}

IntVec3 lift(const QPoint& p)
{
    const Rat& x = p.x.rat_part();
    const Rat& y = p.y.rat_part();
    Int den = lcm(x.get_den(), y.get_den());
    Int X = x.get_num() * (den / x.get_den());
    Int Y = y.get_num() * (den / y.get_den());
    Int g = gcd(gcd(X, Y), den);
    return {to_i64(X / g), to_i64(Y / g), to_i64(den / g)};
}

IntVec2 floor_box(std::initializer_list<QPoint> pts)
{
    IntVec2 box{0, 0};
    for (const QPoint& p : pts) {
        box.x = std::max(box.x, to_i64(p.x.floor()));
        box.y = std::max(box.y, to_i64(p.y.floor()));
    }
    return box;
}

// Simplest fraction in the interval between lo and hi (each end open or
// closed), both positive, by Stern-Brocot descent.
Rat simplest_in(const QuadRat& lo, bool lo_open, const QuadRat& hi, bool hi_open)
{
    Int a = 0, b = 1, c = 1, d = 0;
    for (;;) {
        const Int p = a + c, q = b + d;
        const QuadRat m{Rat(p, q)};
        if (lo_open ? m <= lo : m < lo) {
            a = p;
            b = q;
        } else if (hi_open ? hi <= m : hi < m) {
            c = p;
            d = q;
        } else {
            return Rat(p, q);
        }
    }
}

// largest index range tried when certifying a replacement triangle, as a
// multiple of j0 + 1
constexpr std::int64_t kMaxShrinkFactor = std::int64_t(1) << 16;

}

ConeAnalysis polygon_cone(const Polygon& F)
{
    ConeAnalysis an;
    an.status = ConeStatus::proper;
    an.hi = contact_of(extremal(F, 1));
    an.lo = contact_of(extremal(F, -1));
    return an;
}

FgDecision polygon_fg_decision(const Polygon& F)
{
    const ConeAnalysis an = polygon_cone(F);
    const bool hi_ok = an.hi.has_rational_point();
    const bool lo_ok = an.lo.has_rational_point();
    if (hi_ok && lo_ok)
        return {FgVerdict::finitely_generated, ""};
    auto why = [](const char* name, const RayContact& c) {
        if (c.kind == Contact::point)
            return std::string(name) + " meets the polygon only at the irrational point " + to_string(c.near);
        return std::string(name) + " has irrational slope and meets the polygon in a segment";
    };
    std::string w;
    if (!hi_ok)
        w = why("tau_1", an.hi);
    if (!lo_ok)
        w += (w.empty() ? "" : "; ") + why("tau_2", an.lo);
    return {FgVerdict::not_finitely_generated, w};
}

bool polygon_dilation_member(IntVec2 X, const Polygon& F)
{
    if (X.x == 0 && X.y == 0)
        return true;
    if (X.x < 0 || X.y < 0)
        return false;
    const QPoint Xq(X);
    Int lo = 1;
    bool bounded = false;
    Int hi = 0;
    for (std::size_t j = 0; j < F.size(); ++j) {
        const QPoint E = F[j + 1] - F[j];
        // inside the j-th edge of i*F  <=>  i*c >= v
        const QuadRat c = cross(E, F[j]);
        const QuadRat v = cross(E, Xq);
        int s = c.sign();
        if (s == 0) {
            if (v.sign() > 0)
                return false;
        } else if (s > 0) {
            lo = std::max(lo, (v / c).ceil());
        } else {
            Int h = (v / c).floor();
            hi = bounded ? std::min(hi, h) : h;
            bounded = true;
        }
    }
    return !bounded || lo <= hi;
}

GenSet polygon_min_gens_rational(const Polygon& F)
{
    if (!F.all_rational())
        throw PreconditionError("rational lift needs rational vertices");
    std::vector<IntVec3> rays;
    for (const QPoint& p : F.vertices())
        rays.push_back(lift(p));
    return project_to_plane(hilbert_basis_3d(rays), rays);
}

GenSet polygon_min_gens(const Polygon& F)
{
    const FgDecision fg = polygon_fg_decision(F);
    if (fg.verdict != FgVerdict::finitely_generated)
        throw PreconditionError("not finitely generated: " + fg.witness);
    if (F.all_rational())
        return polygon_min_gens_rational(F);
    return polygon_min_gens_decomposed(F);
}

IntVec2 simplest_direction_between(const QPoint& lo, const QPoint& hi)
{
    if (cross(lo, hi).sign() <= 0)
        throw PreconditionError("directions out of order");
    IntVec2 L{1, 0}, R{0, 1};
    for (;;) {
        IntVec2 M = L + R;
        QPoint m(M);
        if (cross(lo, m).sign() <= 0)
            L = M;
        else if (cross(m, hi).sign() <= 0)
            R = M;
        else
            return M;
    }
}

GenSet polygon_min_gens_decomposed(const Polygon& F)
{
    const FgDecision fg = polygon_fg_decision(F);
    if (fg.verdict != FgVerdict::finitely_generated)
        throw PreconditionError("not finitely generated: " + fg.witness);
    const ConeAnalysis an = polygon_cone(F);

    std::vector<IntVec2> gens;
    std::vector<QPoint> middle = F.vertices();
    if (an.hi.kind == Contact::point) {
        const std::size_t k = index_of(F, an.hi.near);
        const QPoint& a = F[k + 1];
        const QPoint& b = F[k + F.size() - 1];
        const QPoint nb = cross(a, b).sign() > 0 ? b : a; // larger angle
        const QPoint cut(simplest_direction_between(nb, an.hi.near));
        const Polygon top(clip(F.vertices(), cut, true));
        const GenSet g = triangle_min_gens(top);
        gens.insert(gens.end(), g.points.begin(), g.points.end());
        middle = clip(middle, cut, false);
    }
    if (an.lo.kind == Contact::point) {
        const std::size_t k = index_of(F, an.lo.near);
        const QPoint& a = F[k + 1];
        const QPoint& b = F[k + F.size() - 1];
        const QPoint nb = cross(a, b).sign() > 0 ? a : b; // smaller angle
        const QPoint cut(simplest_direction_between(an.lo.near, nb));
        // mirror so that the apex sits on the upper ray
        const Polygon bottom(clip(F.vertices(), cut, false));
        const GenSet g = triangle_min_gens(swapped(bottom));
        for (IntVec2 p : g.points)
            gens.push_back({p.y, p.x});
        middle = clip(middle, cut, true);
    }
    const GenSet g = segment_cut_gens(Polygon(middle));
    gens.insert(gens.end(), g.points.begin(), g.points.end());
    return minimalize(gens);
}

SegmentCutAnalysis analyze_segment_cut(const Polygon& F)
{
    SegmentCutAnalysis an;
    an.rays = polygon_cone(F);
    if (an.rays.hi.kind != Contact::segment || an.rays.lo.kind != Contact::segment)
        throw PreconditionError("both extremal rays must meet the polygon in segments");
    if (!an.rays.rational())
        throw PreconditionError("not finitely generated: an extremal ray has irrational slope");
    const Cone2 cone = an.rays.cone();
    an.hilbert = hilbert_basis_2d(cone);
    an.hi = ray_data_of(an.rays.hi);
    an.lo = ray_data_of(an.rays.lo);

    an.sprime = an.hilbert;
    for (const RayData* d : {&an.hi, &an.lo}) {
        if (d->lambdas == std::vector<std::int64_t>{1})
            continue;
        RaySurgerySpec spec{d->g, d->g, {}};
        for (std::int64_t lam : d->lambdas)
            spec.s_list.push_back(lam * d->g);
        an.sprime = replace_ray_gens(an.sprime, spec);
    }

    // past the chord j0*[near_hi, near_lo] consecutive dilations overlap on
    // both rays, so they cover the rest of the cone
    an.j0 = std::max(overlap_index(an.rays.hi.alpha, an.rays.hi.beta),
        overlap_index(an.rays.lo.alpha, an.rays.lo.beta));
    const QuadRat j0{Rat(an.j0)};
    const QPoint Ph = j0 * an.rays.hi.near;
    const QPoint Pl = j0 * an.rays.lo.near;
    const int origin_side = cross(Pl - Ph, QPoint(IntVec2{0, 0}) - Ph).sign();
    an.T = kernels::scan_box(floor_box({Ph, Pl}), [&](IntVec2 p) {
        if (!cone.interior(p))
            return false;
        if (cross(Pl - Ph, QPoint(p) - Ph).sign() * origin_side < 0)
            return false;
        return !polygon_dilation_member(p, F);
    });
    return an;
}

GenSet segment_cut_gens(const Polygon& F)
{
    const SegmentCutAnalysis an = analyze_segment_cut(F);
    return remove_finite_set(an.sprime, an.T);
}

TriangleAnalysis analyze_triangle(const Polygon& F)
{
    if (F.size() != 3)
        throw PreconditionError("expected a triangle");
    const ConeAnalysis an = polygon_cone(F);
    if (an.hi.kind != Contact::point || !an.hi.near.is_rational())
        throw PreconditionError("triangle apex on tau_1 must be a single rational point");
    if (an.lo.kind != Contact::segment || !an.lo.rational_slope)
        throw PreconditionError("triangle side on tau_2 must be a segment of rational slope");

    TriangleAnalysis t;
    t.P1 = an.hi.near;
    t.P2 = an.lo.far;
    t.P3 = an.lo.near;
    const QPoint u = t.P2 - t.P1;
    const QPoint w = t.P3 - t.P1;
    // j P1 + sigma u = (j+1) P1 + tau w, independent of j
    const QPoint mw = QuadRat(-1) * w;
    const QuadRat det = cross(u, mw);
    const QuadRat sigma = cross(t.P1, mw) / det;
    const QuadRat tau = cross(u, t.P1) / det;
    if (sigma.sign() < 0 || tau.sign() < 0)
        throw PreconditionError("dilated sides never meet");

    const Rat& t1 = an.hi.alpha.rat_part();
    const std::int64_t q = to_i64(t1.get_den());
    std::int64_t j = q;
    while (QuadRat(Rat(j)) < sigma || QuadRat(Rat(j + 1)) < tau)
        j += q;
    t.j0 = j;
    t.s1 = to_i64(t1.get_num()) * an.hi.g;
    t.j1 = t.j0 + q;
    const QuadRat J0{Rat(t.j0)};
    t.V = J0 * t.P1 + sigma * u;

    const Cone2 cone = an.cone();
    const QPoint A = J0 * t.P1;
    const QPoint B = J0 * t.P3;
    const int origin_side = cross(B - A, QPoint(IntVec2{0, 0}) - A).sign();
    t.T2 = kernels::scan_box(floor_box({A, B}), [&](IntVec2 p) {
        if ((p.x == 0 && p.y == 0) || !cone.contains(p))
            return false;
        if (cross(B - A, QPoint(p) - A).sign() * origin_side < 0)
            return false;
        return !polygon_dilation_member(p, F);
    });
    // parallelogram spanned at j0 P1 by s1 and V - j0 P1
    const QPoint e1(t.s1);
    const QPoint e2 = t.V - A;
    const QuadRat area = cross(e1, e2);
    t.T1 = kernels::scan_box(floor_box({A + e1, A + e1 + e2, A + e2, A}), [&](IntVec2 p) {
        QPoint d = QPoint(p) - A;
        QuadRat l1 = cross(d, e2) / area;
        QuadRat l2 = cross(e1, d) / area;
        if (l1.sign() < 0 || l2.sign() < 0 || QuadRat(1) < l1 || QuadRat(1) < l2)
            return false;
        return !polygon_dilation_member(p, F);
    });
    return t;
}

Polygon rational_triangle(const Polygon& F)
{
    const TriangleAnalysis t = analyze_triangle(F);
    if (F.all_rational())
        return F;
    const ConeAnalysis an = polygon_cone(F);
    const QuadRat& alpha = an.lo.alpha;
    const QuadRat& beta = an.lo.beta;
    const QPoint g(an.lo.g);
    // alpha' <= alpha and beta' >= beta with the same ceil(i alpha) and
    // floor(i beta) for i <= m keep the lattice points of the first m
    // dilations of the side on tau_2 unchanged
    QuadRat alpha_floor{Rat(0)};
    QuadRat beta_ceil = beta + QuadRat(1);
    std::int64_t done = 0;
    for (std::int64_t m = t.j0 + 1; m <= kMaxShrinkFactor * (t.j0 + 1); m *= 2) {
        for (std::int64_t i = done + 1; i <= m; ++i) {
            const QuadRat I{Rat(i)};
            alpha_floor = max(alpha_floor, QuadRat(Rat((I * alpha).ceil() - 1, Int(i))));
            beta_ceil = min(beta_ceil, QuadRat(Rat((I * beta).floor() + 1, Int(i))));
        }
        done = m;
        const QuadRat a2 = alpha.is_rational() ? alpha : QuadRat(simplest_in(alpha_floor, true, alpha, false));
        const QuadRat b2 = beta.is_rational() ? beta : QuadRat(simplest_in(beta, false, beta_ceil, true));

        Polygon candidate({t.P1, a2 * g, b2 * g});
        // F sits inside the candidate, so the two semigroups agree once the
        // candidate's generators are all reached by F's dilations
        const GenSet G = polygon_min_gens_rational(candidate);
        if (std::all_of(G.points.begin(), G.points.end(), [&](IntVec2 p) { return polygon_dilation_member(p, F); }))
            return candidate;
    }
    throw PreconditionError("no rational replacement triangle found");
}

GenSet triangle_min_gens(const Polygon& F)
{
    return polygon_min_gens_rational(rational_triangle(F));
}

QPoint ApexStrip::V(std::int64_t i) const
{
    return QuadRat(Rat(i)) * P + sigma * (A - P);
}

ApexStrip apex_strip_distance(const Polygon& F, Ray which)
{
    const ConeAnalysis an = polygon_cone(F);
    const RayContact& c = which == Ray::hi ? an.hi : an.lo;
    if (c.kind != Contact::point)
        throw PreconditionError("ray-body intersection is not a single point");
    ApexStrip s;
    const std::size_t k = index_of(F, c.near);
    const QPoint& next = F[k + 1];
    const QPoint& prev = F[k + F.size() - 1];
    s.P = c.near;
    s.A = which == Ray::hi ? next : prev;
    s.B = which == Ray::hi ? prev : next;
    const QPoint u = s.A - s.P;
    const QPoint mw = QuadRat(-1) * (s.B - s.P);
    const QuadRat det = cross(u, mw);
    if (det.sign() == 0)
        throw PreconditionError("edges through the vertex are parallel");
    s.sigma = cross(s.P, mw) / det;
    s.tau = cross(u, s.P) / det;
    if (s.sigma.sign() < 0 || s.tau.sign() < 0)
        throw PreconditionError("dilated edges never meet");
    s.numerator = s.sigma * cross(s.P, s.A);
    s.norm2 = norm2(s.P);
    Int first = std::max(s.sigma.ceil(), (s.tau - QuadRat(1)).ceil());
    s.first_index = std::max<std::int64_t>(1, to_i64(first));
    return s;
}

BoundInputs polygon_bound_inputs(const Polygon& F)
{
    const SegmentCutAnalysis an = analyze_segment_cut(F);
    BoundInputs b;
    std::int64_t M = 0;
    for (IntVec2 g : an.hilbert.points)
        M = std::max(M, norm1(g));
    std::int64_t k = 1;
    for (const RayData* d : {&an.hi, &an.lo})
        k = std::max(k, d->lambdas.back());
    b.M = M;
    b.k = k;
    b.l = static_cast<std::int64_t>(an.T.size());
    return b;
}

} // namespace cbsg
