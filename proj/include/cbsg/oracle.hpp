#pragma once

#include "cbsg/body.hpp"
#include "cbsg/lattice_cone.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

// Brute-force references. Nothing here touches the cone, surgery or
// circle/polygon machinery; only exact arithmetic and the body types.
namespace cbsg::oracle {

// Candidate dilation indices for one point: either a finite range to scan,
// or an answer already settled (bodies touching or containing the origin,
// where every large enough i behaves the same).
struct IndexWindow {
    Int lo = 1;
    Int hi = 0;
    std::optional<bool> settled;
};

struct DilationBody {
    std::string name;
    // X in i*F, exact
    std::function<bool(IntVec2 X, const Int& i)> in_dilate;
    std::function<IndexWindow(IntVec2 X)> window;
};

DilationBody from_body(const ConvexBody2& body);
DilationBody circle_body(const Circle& C);
DilationBody polygon_body(const Polygon& F);
DilationBody segment_body(const RaySegment& S);
// { X in the closed quadrant : r_in <= |X| <= r_out }, not convex.
DilationBody annulus_body(const Rat& r_in, const Rat& r_out);
// A body with no points; only the origin is a member.
DilationBody empty_body();

bool dilation_member(std::int64_t x, std::int64_t y, const DilationBody& body);

// Members with x + y <= norm_bound, origin included, lexicographic.
std::vector<IntVec2> enumerate_members(const DilationBody& body, std::int64_t norm_bound);

// Nonzero members that are not the sum of two nonzero members.
GenSet naive_min_gens(const DilationBody& body, std::int64_t norm_bound);

} // namespace cbsg::oracle
