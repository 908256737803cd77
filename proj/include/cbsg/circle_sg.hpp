#pragma once

#include "cbsg/body.hpp"
#include "cbsg/lattice_cone.hpp"
#include "cbsg/surgery.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cbsg {

enum class FgVerdict { finitely_generated, not_finitely_generated, trivial_zero, full_cone };

struct FgDecision {
    FgVerdict verdict;
    std::string witness;
};

const char* verdict_name(FgVerdict v);

// Extremal rays of the cone over the disc's part in the closed quadrant,
// with how the disc meets each of them.
ConeAnalysis circle_cone(const Circle& C);

FgDecision circle_fg_decision(const Circle& C);

// Lattice points of the semigroup on one extremal ray: multiples of g by
// the numerical semigroup <lambdas>.
struct RayData {
    IntVec2 g;
    std::vector<std::int64_t> lambdas;
    bool point = false; // the disc touches the ray in one point
};

RayData ray_data_of(const RayContact& c);

struct Stabilization {
    Rat d_prime_sq;
    std::int64_t i0 = 1;
    QuadRat d_sq;
};

struct CircleAnalysis {
    ConeAnalysis rays;
    Cone2 cone;
    GenSet hilbert;
    RayData hi;
    RayData lo;
    Stabilization stab;
};

// Requires a finitely generated circle with a proper two-ray cone.
CircleAnalysis analyze_circle(const Circle& C);

bool circle_member(std::int64_t x, std::int64_t y, const Circle& C);

// Distance to tau_2 of the lower point of C_i and C_{i+1}; empty when the
// two discs are disjoint. Needs a tangent (single point) lower ray.
std::optional<QuadRat> overlap_height(std::int64_t i, const Circle& C);

Stabilization stabilization(const Circle& C);

GenSet sprime_generators(const Circle& C, const CircleAnalysis& an);

// Interior lattice points of the cone that the semigroup misses.
std::vector<IntVec2> exceptional_set(const Circle& C, const CircleAnalysis& an, const GenSet& sprime);

// Same set, searched only in the triangle O, i0*T1, i0*T2 (both rays
// tangent).
std::vector<IntVec2> exceptional_set_triangle(const Circle& C, const CircleAnalysis& an, const GenSet& sprime);

GenSet circle_min_gens(const Circle& C);

bool circle_modular_inequality(std::int64_t x, std::int64_t y, const Circle& C);

BoundInputs circle_bound_inputs(const Circle& C);

} // namespace cbsg
