#pragma once

#include "cbsg/geometry.hpp"

#include <cstdint>
#include <functional>
#include <vector>

// Hot loops, each in a serial reference form and an OpenMP form. The
// library calls the dispatching version; tests pin the two against each
// other.
namespace cbsg::kernels {

// Dense table over the box [0, box.x] x [0, box.y], indexed by x*(box.y+1)+y.
struct ReachTable {
    IntVec2 box;
    std::vector<std::uint8_t> cell;

    bool at(IntVec2 p) const
    {
        if (p.x < 0 || p.y < 0 || p.x > box.x || p.y > box.y)
            return false;
        return cell[static_cast<std::size_t>(p.x * (box.y + 1) + p.y)] != 0;
    }
};

// Cells reachable from the origin by adding generators. Generators must be
// non-negative and nonzero.
ReachTable reachability_serial(const std::vector<IntVec2>& gens, IntVec2 box);
ReachTable reachability_parallel(const std::vector<IntVec2>& gens, IntVec2 box);
ReachTable reachability(const std::vector<IntVec2>& gens, IntVec2 box);

// All points of [0,box.x] x [0,box.y] accepted by pred, in lexicographic
// order. pred must be safe to call concurrently.
using PointPredicate = std::function<bool(IntVec2)>;
std::vector<IntVec2> scan_box_serial(IntVec2 box, const PointPredicate& pred);
std::vector<IntVec2> scan_box_parallel(IntVec2 box, const PointPredicate& pred);
std::vector<IntVec2> scan_box(IntVec2 box, const PointPredicate& pred);

// Points with x + y <= bound accepted by pred, lexicographic order.
std::vector<IntVec2> scan_simplex_serial(std::int64_t bound, const PointPredicate& pred);
std::vector<IntVec2> scan_simplex_parallel(std::int64_t bound, const PointPredicate& pred);
std::vector<IntVec2> scan_simplex(std::int64_t bound, const PointPredicate& pred);

// Concatenation of row(x) for x = 0..rows, in order of x. row must be safe
// to call concurrently.
using RowScan = std::function<std::vector<IntVec2>(std::int64_t x)>;
std::vector<IntVec2> scan_rows_serial(std::int64_t rows, const RowScan& row);
std::vector<IntVec2> scan_rows_parallel(std::int64_t rows, const RowScan& row);
std::vector<IntVec2> scan_rows(std::int64_t rows, const RowScan& row);

void set_threads(int n);
int max_threads();

} // namespace cbsg::kernels
