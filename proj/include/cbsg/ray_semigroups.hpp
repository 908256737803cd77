#pragma once

#include "cbsg/body.hpp"
#include "cbsg/lattice_cone.hpp"

#include <cstdint>
#include <vector>

namespace cbsg {

// Subsemigroup of N given by generators.
struct NumSG {
    std::vector<std::int64_t> gens;
    bool minimal = false;
};

// Smallest k >= 1 with k*beta >= (k+1)*alpha: from there on consecutive
// dilations of [alpha, beta] overlap.
std::int64_t overlap_index(const QuadRat& alpha, const QuadRat& beta);

// t in some i*[alpha, beta], i >= 1 (t = 0 always counts).
bool in_dilated_interval(std::int64_t t, const QuadRat& alpha, const QuadRat& beta);

// Minimal generators of {t in N : t in i*[alpha, beta] for some i}.
NumSG interval_semigroup_gens(const QuadRat& alpha, const QuadRat& beta);

// Minimal generators of the lattice points on the dilations of a segment
// lying on a ray. Directions leaving the quadrant give the empty set.
GenSet segment_semigroup(const RaySegment& seg);

// a*dX mod b <= dX with a = dQ/(dQ-dP), b = dP*dQ/(dQ-dP).
bool modular_inequality_holds(const QuadRat& dX, const QuadRat& dP, const QuadRat& dQ);

struct InequalityWitness {
    QuadRat a;
    QuadRat b;
};

// Pair (a, b), 1 < a < b, with a*dX mod b <= dX for a point X of the
// semigroup on a ray whose body intersection is [dP, dQ] (dP == dQ for a
// single point). Distances only need a common unit.
InequalityWitness general_inequality_witness(const QuadRat& dX, const QuadRat& dP, const QuadRat& dQ);

// a*x - floor(a*x / b)*b
QuadRat real_mod(const QuadRat& ax, const QuadRat& b);

} // namespace cbsg
