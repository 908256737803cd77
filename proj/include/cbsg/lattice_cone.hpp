#pragma once

#include "cbsg/body.hpp"
#include "cbsg/geometry.hpp"

#include <vector>

namespace cbsg {

// Cone between two primitive rays of the closed first quadrant. ray_hi has
// the larger slope. A degenerate cone is a single ray (ray_hi == ray_lo).
struct Cone2 {
    IntVec2 ray_hi;
    IntVec2 ray_lo;
    bool degenerate = false;

    bool contains(IntVec2 p) const;
    // strictly between the rays
    bool interior(IntVec2 p) const;
};

// A finite set of lattice points kept sorted lexicographically without
// duplicates.
struct GenSet {
    std::vector<IntVec2> points;
    bool minimal = false;

    GenSet() = default;
    GenSet(std::vector<IntVec2> pts, bool is_minimal);

    std::size_t size() const { return points.size(); }
    bool contains(IntVec2 p) const;
    friend bool operator==(const GenSet& a, const GenSet& b) { return a.points == b.points; }
};

struct GenSet3 {
    std::vector<IntVec3> points;
    bool minimal = false;

    GenSet3() = default;
    GenSet3(std::vector<IntVec3> pts, bool is_minimal);
};

enum class Contact { empty, point, segment };

// How the body meets one extremal ray. near/far are the endpoints of the
// intersection (equal for a point). When the ray has rational slope, g is
// its primitive direction and near = alpha*g, far = beta*g.
struct RayContact {
    QPoint direction;
    bool rational_slope = false;
    IntVec2 g;
    Contact kind = Contact::empty;
    QPoint near;
    QPoint far;
    QuadRat alpha;
    QuadRat beta;

    // Some point of the intersection is rational.
    bool has_rational_point() const;
};

enum class ConeStatus {
    proper,        // two distinct rays
    empty_body,    // the body misses the closed quadrant: semigroup {0}
    single_ray,    // the body meets the quadrant in a piece of one ray
    full_quadrant, // origin inside a circle: every lattice point is in
};

struct ConeAnalysis {
    ConeStatus status = ConeStatus::proper;
    RayContact hi; // tau_1, larger slope
    RayContact lo; // tau_2

    bool rational() const { return hi.rational_slope && lo.rational_slope; }
    // Requires rational rays.
    Cone2 cone() const;
};

// Builds a contact record for a ray through `dir` meeting the body in
// [near, far].
RayContact make_contact(const QPoint& dir, Contact kind, const QPoint& near, const QPoint& far);

ConeAnalysis cone_of_body(const ConvexBody2& body);

GenSet hilbert_basis_2d(const Cone2& cone);
GenSet3 hilbert_basis_3d(const std::vector<IntVec3>& rays);
GenSet project_to_plane(const GenSet3& g);
// Same result, with membership in the projected monoid read off the cone
// spanned by rays instead of a dynamic program over the bounding box.
GenSet project_to_plane(const GenSet3& g, const std::vector<IntVec3>& rays);

// Unique minimal generating subset of the monoid generated by pts.
GenSet minimalize(const std::vector<IntVec2>& pts);
bool member_of_generated(IntVec2 x, const GenSet& gens);

} // namespace cbsg
