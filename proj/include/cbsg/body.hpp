#pragma once

#include "cbsg/geometry.hpp"

#include <variant>
#include <vector>

namespace cbsg {

// Disc with centre (a, b) and radius r > 0.
struct Circle {
    Rat a;
    Rat b;
    Rat r;

    Circle(Rat a_, Rat b_, Rat r_);
};

// Strictly convex polygon in the closed first quadrant, not containing the
// origin. Vertices are stored clockwise whatever order they came in.
class Polygon {
public:
    explicit Polygon(std::vector<QPoint> vertices);

    const std::vector<QPoint>& vertices() const { return v_; }
    std::size_t size() const { return v_.size(); }
    const QPoint& operator[](std::size_t i) const { return v_[i % v_.size()]; }
    bool all_rational() const;

    // Closed containment test.
    bool contains(const QPoint& p) const;

private:
    std::vector<QPoint> v_;
};

// Segment [alpha*direction, beta*direction] on the ray spanned by a
// primitive integer direction.
struct RaySegment {
    IntVec2 direction;
    QuadRat alpha;
    QuadRat beta;

    RaySegment(IntVec2 dir, QuadRat a, QuadRat b);
};

using ConvexBody2 = std::variant<Circle, Polygon, RaySegment>;

} // namespace cbsg
