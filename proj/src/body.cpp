#include "cbsg/body.hpp"

#include <algorithm>

namespace cbsg {

Circle::Circle(Rat a_, Rat b_, Rat r_) : a(std::move(a_)), b(std::move(b_)), r(std::move(r_))
{
    if (sgn(r) <= 0)
        throw PreconditionError("circle radius must be positive");
}

namespace {

// 2 * signed area, positive for counter-clockwise order
QuadRat twice_area(const std::vector<QPoint>& v)
{
    QuadRat s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += cross(v[i], v[(i + 1) % v.size()]);
    return s;
}

}

Polygon::Polygon(std::vector<QPoint> vertices) : v_(std::move(vertices))
{
    const std::size_t n = v_.size();
    if (n < 3)
        throw PreconditionError("polygon needs at least 3 vertices");

    Int disc = 1;
    for (const auto& p : v_) {
        for (const QuadRat* c : {&p.x, &p.y}) {
            if (c->sign() < 0)
                throw PreconditionError("polygon vertex " + to_string(p) + " is outside the closed first quadrant");
            if (!c->is_rational()) {
                if (disc != 1 && disc != c->disc())
                    throw PreconditionError("polygon vertices mix square roots of different numbers");
                disc = c->disc();
            }
        }
    }

    int s = twice_area(v_).sign();
    if (s == 0)
        throw PreconditionError("polygon has empty interior");
    if (s > 0)
        std::reverse(v_.begin(), v_.end());

    // clockwise and strictly convex: every other vertex lies strictly to the
    // right of each edge
    for (std::size_t i = 0; i < n; ++i) {
        const QPoint& p = v_[i];
        const QPoint& q = v_[(i + 1) % n];
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || j == (i + 1) % n)
                continue;
            if (cross(q - p, v_[j] - p).sign() >= 0)
                throw PreconditionError("polygon is not strictly convex");
        }
    }

    if (contains(QPoint(IntVec2{0, 0})))
        throw PreconditionError("polygon contains the origin");
}

bool Polygon::all_rational() const
{
    return std::all_of(v_.begin(), v_.end(), [](const QPoint& p) { return p.is_rational(); });
}

bool Polygon::contains(const QPoint& p) const
{
    const std::size_t n = v_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const QPoint& a = v_[i];
        const QPoint& b = v_[(i + 1) % n];
        if (cross(b - a, p - a).sign() > 0)
            return false;
    }
    return true;
}

RaySegment::RaySegment(IntVec2 dir, QuadRat a, QuadRat b) : alpha(std::move(a)), beta(std::move(b))
{
    direction = primitive(dir);
    // keep the endpoints where they were if dir was not primitive
    if (direction != dir) {
        QuadRat g{Rat(dir.x != 0 ? dir.x / direction.x : dir.y / direction.y)};
        alpha *= g;
        beta *= g;
    }
    if (alpha.sign() < 0)
        throw PreconditionError("segment parameter alpha must be non-negative");
    if (!(alpha < beta))
        throw PreconditionError("segment needs alpha < beta");
}

} // namespace cbsg
