#include "cbsg/ray_semigroups.hpp"

#include <algorithm>

namespace cbsg {

std::int64_t overlap_index(const QuadRat& alpha, const QuadRat& beta)
{
    if (!(alpha < beta))
        throw PreconditionError("degenerate interval");
    // k*(beta - alpha) >= alpha
    Int k = (alpha / (beta - alpha)).ceil();
    if (k < 1)
        k = 1;
    return to_i64(k);
}

bool in_dilated_interval(std::int64_t t, const QuadRat& alpha, const QuadRat& beta)
{
    if (t == 0)
        return true;
    if (t < 0)
        return false;
    if (alpha.sign() == 0)
        return true;
    // smallest candidate dilation i = ceil(t / beta)
    QuadRat tq{Rat(t)};
    Int i = (tq / beta).ceil();
    if (i < 1)
        i = 1;
    return QuadRat(Rat(i)) * alpha <= tq;
}

namespace {

// minimal generators of the numerical monoid spanned by a sorted set that
// is already closed enough (all members up to its largest element)
std::vector<std::int64_t> minimal_numerical(const std::vector<std::int64_t>& members)
{
    if (members.empty())
        return {};
    const std::int64_t top = members.back();
    std::vector<std::uint8_t> reach(static_cast<std::size_t>(top + 1), 0);
    reach[0] = 1;
    std::vector<std::int64_t> gens;
    for (std::int64_t t : members) {
        // t is a generator iff it is not reachable from the smaller ones
        if (!reach[static_cast<std::size_t>(t)])
            gens.push_back(t);
        else
            continue;
        for (std::int64_t v = t; v <= top; ++v)
            if (reach[static_cast<std::size_t>(v - t)])
                reach[static_cast<std::size_t>(v)] = 1;
    }
    return gens;
}

}

NumSG interval_semigroup_gens(const QuadRat& alpha, const QuadRat& beta)
{
    if (alpha.sign() < 0)
        throw PreconditionError("interval start must be non-negative");
    if (!(alpha < beta))
        throw PreconditionError("degenerate interval");
    if (alpha.sign() == 0)
        return {{1}, true};

    const std::int64_t k = overlap_index(alpha, beta);
    // every real >= k*alpha lies in some dilation
    const std::int64_t c = to_i64((QuadRat(Rat(k)) * alpha).ceil());
    std::int64_t m = -1;
    for (std::int64_t t = 1; t <= c; ++t)
        if (in_dilated_interval(t, alpha, beta)) {
            m = t;
            break;
        }
    // beyond c + m every element is the smallest one plus a member
    std::vector<std::int64_t> members;
    for (std::int64_t t = 1; t < c + m; ++t)
        if (t >= c || in_dilated_interval(t, alpha, beta))
            members.push_back(t);
    return {minimal_numerical(members), true};
}

GenSet segment_semigroup(const RaySegment& seg)
{
    const IntVec2 d = seg.direction;
    if (d.x < 0 || d.y < 0)
        return GenSet({}, true);
    NumSG ns = interval_semigroup_gens(seg.alpha, seg.beta);
    std::vector<IntVec2> pts;
    for (std::int64_t t : ns.gens)
        pts.push_back(t * d);
    return GenSet(std::move(pts), true);
}

QuadRat real_mod(const QuadRat& ax, const QuadRat& b)
{
    Int q = (ax / b).floor();
    return ax - QuadRat(Rat(q)) * b;
}

bool modular_inequality_holds(const QuadRat& dX, const QuadRat& dP, const QuadRat& dQ)
{
    if (dP == dQ)
        throw PreconditionError("degenerate interval");
    QuadRat a = dQ / (dQ - dP);
    QuadRat b = dP * dQ / (dQ - dP);
    return real_mod(a * dX, b) <= dX;
}

InequalityWitness general_inequality_witness(const QuadRat& dX, const QuadRat& dP, const QuadRat& dQ)
{
    if (dX.sign() == 0)
        return {QuadRat(2), QuadRat(3)};
    if (dP.sign() <= 0 || dQ < dP)
        throw PreconditionError("intersection distances must satisfy 0 < dP <= dQ");
    if (dP == dQ) {
        // X = i*P; a*dX is a multiple of b = a*i*dP
        QuadRat i = dX / dP;
        if (!i.is_rational() || i.rat_part().get_den() != 1 || sgn(i.rat_part()) <= 0)
            throw PreconditionError("not a member");
        QuadRat a(2);
        QuadRat b = a * dX;
        if (!(a < b))
            throw PreconditionError("no witness with 1 < a < b when d(X) <= 1");
        return {a, b};
    }
    if (!modular_inequality_holds(dX, dP, dQ))
        throw PreconditionError("not a member");
    QuadRat a = dQ / (dQ - dP);
    QuadRat b = a * dP;
    return {a, b};
}

} // namespace cbsg
