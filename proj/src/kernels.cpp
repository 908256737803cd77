#include "cbsg/kernels.hpp"

#include <algorithm>

#include <omp.h>

namespace cbsg::kernels {

namespace {

ReachTable empty_table(IntVec2 box)
{
    if (box.x < 0 || box.y < 0)
        throw PreconditionError("reachability box must be non-negative");
    ReachTable t;
    t.box = box;
    t.cell.assign(static_cast<std::size_t>((box.x + 1) * (box.y + 1)), 0);
    t.cell[0] = 1;
    return t;
}

std::vector<IntVec2> usable(const std::vector<IntVec2>& gens, IntVec2 box)
{
    std::vector<IntVec2> g;
    for (IntVec2 v : gens) {
        if (v.x < 0 || v.y < 0 || (v.x == 0 && v.y == 0))
            throw PreconditionError("generators must be non-negative and nonzero");
        if (leq(v, box))
            g.push_back(v);
    }
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

// Below this many cells per anti-diagonal the wavefront is not worth a
// parallel region.
constexpr std::int64_t kMinDiagonal = 512;
constexpr std::int64_t kMinRows = 64;

}

ReachTable reachability_serial(const std::vector<IntVec2>& gens, IntVec2 box)
{
    ReachTable t = empty_table(box);
    const auto g = usable(gens, box);
    const std::int64_t h = box.y + 1;
    for (std::int64_t x = 0; x <= box.x; ++x) {
        for (std::int64_t y = 0; y <= box.y; ++y) {
            if (x == 0 && y == 0)
                continue;
            std::uint8_t r = 0;
            for (IntVec2 v : g) {
                if (v.x <= x && v.y <= y && t.cell[(x - v.x) * h + (y - v.y)]) {
                    r = 1;
                    break;
                }
            }
            t.cell[x * h + y] = r;
        }
    }
    return t;
}

// Every generator strictly increases x + y, so each anti-diagonal only
// reads earlier ones and its cells can be filled independently.
ReachTable reachability_parallel(const std::vector<IntVec2>& gens, IntVec2 box)
{
    ReachTable t = empty_table(box);
    const auto g = usable(gens, box);
    const std::int64_t h = box.y + 1;
    std::uint8_t* cell = t.cell.data();
    for (std::int64_t s = 1; s <= box.x + box.y; ++s) {
        const std::int64_t lo = std::max<std::int64_t>(0, s - box.y);
        const std::int64_t hi = std::min<std::int64_t>(box.x, s);
#pragma omp parallel for schedule(static) if (hi - lo + 1 >= kMinDiagonal)
        for (std::int64_t x = lo; x <= hi; ++x) {
            const std::int64_t y = s - x;
            std::uint8_t r = 0;
            for (IntVec2 v : g) {
                if (v.x <= x && v.y <= y && cell[(x - v.x) * h + (y - v.y)]) {
                    r = 1;
                    break;
                }
            }
            cell[x * h + y] = r;
        }
    }
    return t;
}

ReachTable reachability(const std::vector<IntVec2>& gens, IntVec2 box)
{
    if (omp_get_max_threads() > 1 && std::min(box.x, box.y) >= kMinDiagonal)
        return reachability_parallel(gens, box);
    return reachability_serial(gens, box);
}

std::vector<IntVec2> scan_box_serial(IntVec2 box, const PointPredicate& pred)
{
    std::vector<IntVec2> out;
    for (std::int64_t x = 0; x <= box.x; ++x)
        for (std::int64_t y = 0; y <= box.y; ++y)
            if (pred({x, y}))
                out.push_back({x, y});
    return out;
}

std::vector<IntVec2> scan_box_parallel(IntVec2 box, const PointPredicate& pred)
{
    // one bucket per row keeps the output order without a final sort
    std::vector<std::vector<IntVec2>> rows(static_cast<std::size_t>(std::max<std::int64_t>(box.x + 1, 0)));
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t x = 0; x <= box.x; ++x) {
        auto& row = rows[static_cast<std::size_t>(x)];
        for (std::int64_t y = 0; y <= box.y; ++y)
            if (pred({x, y}))
                row.push_back({x, y});
    }
    std::vector<IntVec2> out;
    for (auto& row : rows)
        out.insert(out.end(), row.begin(), row.end());
    return out;
}

std::vector<IntVec2> scan_box(IntVec2 box, const PointPredicate& pred)
{
    if (omp_get_max_threads() > 1 && box.x + 1 >= kMinRows)
        return scan_box_parallel(box, pred);
    return scan_box_serial(box, pred);
}

std::vector<IntVec2> scan_simplex_serial(std::int64_t bound, const PointPredicate& pred)
{
    std::vector<IntVec2> out;
    for (std::int64_t x = 0; x <= bound; ++x)
        for (std::int64_t y = 0; x + y <= bound; ++y)
            if (pred({x, y}))
                out.push_back({x, y});
    return out;
}

std::vector<IntVec2> scan_simplex_parallel(std::int64_t bound, const PointPredicate& pred)
{
    std::vector<std::vector<IntVec2>> rows(static_cast<std::size_t>(std::max<std::int64_t>(bound + 1, 0)));
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t x = 0; x <= bound; ++x) {
        auto& row = rows[static_cast<std::size_t>(x)];
        for (std::int64_t y = 0; x + y <= bound; ++y)
            if (pred({x, y}))
                row.push_back({x, y});
    }
    std::vector<IntVec2> out;
    for (auto& row : rows)
        out.insert(out.end(), row.begin(), row.end());
    return out;
}

std::vector<IntVec2> scan_simplex(std::int64_t bound, const PointPredicate& pred)
{
    if (omp_get_max_threads() > 1 && bound + 1 >= kMinRows)
        return scan_simplex_parallel(bound, pred);
    return scan_simplex_serial(bound, pred);
}

std::vector<IntVec2> scan_rows_serial(std::int64_t rows, const RowScan& row)
{
    std::vector<IntVec2> out;
    for (std::int64_t x = 0; x <= rows; ++x) {
        auto r = row(x);
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

std::vector<IntVec2> scan_rows_parallel(std::int64_t rows, const RowScan& row)
{
    std::vector<std::vector<IntVec2>> parts(static_cast<std::size_t>(std::max<std::int64_t>(rows + 1, 0)));
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t x = 0; x <= rows; ++x)
        parts[static_cast<std::size_t>(x)] = row(x);
    std::vector<IntVec2> out;
    for (auto& r : parts)
        out.insert(out.end(), r.begin(), r.end());
    return out;
}

std::vector<IntVec2> scan_rows(std::int64_t rows, const RowScan& row)
{
    if (omp_get_max_threads() > 1 && rows + 1 >= kMinRows)
        return scan_rows_parallel(rows, row);
    return scan_rows_serial(rows, row);
}

void set_threads(int n)
{
    if (n > 0)
        omp_set_num_threads(n);
}

int max_threads()
{
    return omp_get_max_threads();
}

} // namespace cbsg::kernels
