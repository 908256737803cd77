#include "cbsg/geometry.hpp"

#include <numeric>

namespace cbsg {

std::string to_string(IntVec2 v)
{
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

std::ostream& operator<<(std::ostream& os, IntVec2 v)
{
    return os << to_string(v);
}

IntVec2 primitive(IntVec2 v)
{
    if (v.x == 0 && v.y == 0)
        throw PreconditionError("primitive of the zero vector");
    std::int64_t g = std::gcd(v.x, v.y);
    return {v.x / g, v.y / g};
}

IntVec2 primitive(const Int& x, const Int& y)
{
    if (sgn(x) == 0 && sgn(y) == 0)
        throw PreconditionError("primitive of the zero vector");
    Int g = gcd(x, y);
    return {to_i64(x / g), to_i64(y / g)};
}

std::string to_string(const QPoint& p)
{
    return "(" + p.x.str() + ", " + p.y.str() + ")";
}

} // namespace cbsg
