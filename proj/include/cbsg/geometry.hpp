#pragma once

#include "cbsg/exactnum.hpp"

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace cbsg {

// Lattice point. Coordinates are non-negative for semigroup elements, but
// the type itself is also used for differences.
struct IntVec2 {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend auto operator<=>(const IntVec2&, const IntVec2&) = default;
    friend IntVec2 operator+(IntVec2 a, IntVec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend IntVec2 operator-(IntVec2 a, IntVec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend IntVec2 operator*(std::int64_t k, IntVec2 a) { return {k * a.x, k * a.y}; }
};

inline std::int64_t norm1(IntVec2 v) { return (v.x < 0 ? -v.x : v.x) + (v.y < 0 ? -v.y : v.y); }
inline std::int64_t cross(IntVec2 a, IntVec2 b) { return a.x * b.y - a.y * b.x; }
inline std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }
inline bool leq(IntVec2 a, IntVec2 b) { return a.x <= b.x && a.y <= b.y; }
std::string to_string(IntVec2 v);
std::ostream& operator<<(std::ostream& os, IntVec2 v);

// v / gcd(|v.x|, |v.y|); throws on the zero vector.
IntVec2 primitive(IntVec2 v);
IntVec2 primitive(const Int& x, const Int& y);

struct IntVec3 {
    std::int64_t x = 0, y = 0, z = 0;
    friend auto operator<=>(const IntVec3&, const IntVec3&) = default;
    friend IntVec3 operator+(IntVec3 a, IntVec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend IntVec3 operator-(IntVec3 a, IntVec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
};

// Point with coordinates in Q(sqrt D).
struct QPoint {
    QuadRat x;
    QuadRat y;

    QPoint() = default;
    QPoint(QuadRat x_, QuadRat y_) : x(std::move(x_)), y(std::move(y_)) {}
    explicit QPoint(IntVec2 v) : x(Rat(v.x)), y(Rat(v.y)) {}

    bool is_rational() const { return x.is_rational() && y.is_rational(); }
    friend bool operator==(const QPoint& a, const QPoint& b) { return a.x == b.x && a.y == b.y; }
    friend QPoint operator+(const QPoint& a, const QPoint& b) { return {a.x + b.x, a.y + b.y}; }
    friend QPoint operator-(const QPoint& a, const QPoint& b) { return {a.x - b.x, a.y - b.y}; }
    friend QPoint operator*(const QuadRat& k, const QPoint& a) { return {k * a.x, k * a.y}; }
};

inline QuadRat cross(const QPoint& a, const QPoint& b) { return a.x * b.y - a.y * b.x; }
inline QuadRat dot(const QPoint& a, const QPoint& b) { return a.x * b.x + a.y * b.y; }
inline QuadRat norm2(const QPoint& a) { return dot(a, a); }
std::string to_string(const QPoint& p);

} // namespace cbsg
