#pragma once

#include "cbsg/lattice_cone.hpp"

#include <vector>

namespace cbsg {

// Replace the part of a semigroup lying on ray tau by <s_list>. g1 is the
// primitive lattice vector of tau, and every s is a positive multiple of it.
struct RaySurgerySpec {
    IntVec2 ray;
    IntVec2 g1;
    std::vector<IntVec2> s_list;
};

struct BoundInputs {
    Int M;
    Int k;
    std::int64_t l = 0;
};

GenSet replace_ray_gens(const GenSet& F, const RaySurgerySpec& spec);

// F \ {a}; a must be a minimal generator.
GenSet remove_element(const GenSet& F, IntVec2 a);

// F \ A, removing the lexicographically smallest removable element first.
GenSet remove_finite_set(const GenSet& F, std::vector<IntVec2> A);

// 3^l (2k - 1) M
Int generator_norm_bound(const BoundInputs& b);

} // namespace cbsg
