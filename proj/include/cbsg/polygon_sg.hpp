#pragma once

#include "cbsg/body.hpp"
#include "cbsg/circle_sg.hpp"
#include "cbsg/lattice_cone.hpp"
#include "cbsg/surgery.hpp"

#include <vector>

namespace cbsg {

enum class Ray { hi, lo };

ConeAnalysis polygon_cone(const Polygon& F);

// FINITELY_GENERATED or NOT_FINITELY_GENERATED with the offending ray.
FgDecision polygon_fg_decision(const Polygon& F);

// X in i*F for some i >= 1 (X = 0 counts), decided edge by edge.
bool polygon_dilation_member(IntVec2 X, const Polygon& F);

GenSet polygon_min_gens_rational(const Polygon& F);

// Dispatch: rational lift when every vertex is rational, the
// decomposition pipeline otherwise.
GenSet polygon_min_gens(const Polygon& F);

// Forces the decomposition pipeline (cut off apex triangles, treat the
// middle piece with ray surgery), whatever the vertices are.
GenSet polygon_min_gens_decomposed(const Polygon& F);

// Both extremal rays meet F in segments (with rational slopes).
struct SegmentCutAnalysis {
    ConeAnalysis rays;
    GenSet hilbert;
    RayData hi;
    RayData lo;
    GenSet sprime;
    std::int64_t j0 = 1;
    std::vector<IntVec2> T;
};

SegmentCutAnalysis analyze_segment_cut(const Polygon& F);
GenSet segment_cut_gens(const Polygon& F);

// Triangle with a rational apex on tau_1 and its opposite side on tau_2.
struct TriangleAnalysis {
    QPoint P1; // apex
    QPoint P2; // far end on tau_2
    QPoint P3; // near end on tau_2
    std::int64_t j0 = 1;
    IntVec2 s1;        // first lattice point of the semigroup on tau_1
    std::int64_t j1 = 1; // j1*P1 = j0*P1 + s1
    QPoint V;          // j0(P1P2) meets (j0+1)(P1P3)
    std::vector<IntVec2> T1;
    std::vector<IntVec2> T2;
};

TriangleAnalysis analyze_triangle(const Polygon& F);

// Minimal generators via an equivalent triangle with rational vertices.
GenSet triangle_min_gens(const Polygon& F);

// The rational triangle used by triangle_min_gens (F itself when the
// vertices are already rational).
Polygon rational_triangle(const Polygon& F);

// V_i = i[P, A] meets (i+1)[B, P] at V_i = i P + sigma (A - P), where P is
// the single vertex on the ray. The distance from V_i to the ray is
// |numerator| / sqrt(norm2), the same for every i >= first_index.
struct ApexStrip {
    QPoint P;
    QPoint A;
    QPoint B;
    QuadRat sigma;
    QuadRat tau;
    QuadRat numerator;
    QuadRat norm2;
    std::int64_t first_index = 1;

    QuadRat distance_sq() const { return numerator * numerator / norm2; }
    QPoint V(std::int64_t i) const;
};

ApexStrip apex_strip_distance(const Polygon& F, Ray which);

// Segment/segment polygons only.
BoundInputs polygon_bound_inputs(const Polygon& F);

// Simplest fraction p/q (direction (q, p)) strictly between the directions
// lo and hi, angle(lo) < angle(hi), both in the closed first quadrant.
IntVec2 simplest_direction_between(const QPoint& lo, const QPoint& hi);

} // namespace cbsg
