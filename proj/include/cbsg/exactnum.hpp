#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cbsg {

using Int = mpz_class;
using Rat = mpq_class;

// Malformed input text (numbers, body files).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation was called outside its domain.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rat make_rat(long num, long den = 1);
Int floor_rat(const Rat& x);
Int ceil_rat(const Rat& x);

// Largest n with n*n <= x.
Int rat_floor_sqrt(const Rat& x);
std::optional<Rat> is_rational_square(const Rat& x);

// n = f^2 * D with D square-free. Requires n > 0.
Int square_free_part(const Int& n, Int* factor = nullptr);

std::int64_t to_i64(const Int& v);

// p + q*sqrt(D). D is square-free; a zero surd part means the value is
// rational and then D is irrelevant (it is kept at 1).
class QuadRat {
public:
    QuadRat() = default;
    QuadRat(long v) : p_(v) {}
    QuadRat(const Int& v) : p_(v) {}
    QuadRat(const Rat& v) : p_(v) {}
    QuadRat(const Rat& p, const Rat& q, const Int& D);

    // sqrt(x) for rational x >= 0, normalized.
    static QuadRat sqrt_of(const Rat& x);

    const Rat& rat_part() const { return p_; }
    const Rat& surd_part() const { return q_; }
    const Int& disc() const { return d_; }
    bool is_rational() const { return sgn(q_) == 0; }

    int sign() const;
    QuadRat conj() const;
    // (p + q sqrt D)(p - q sqrt D)
    Rat norm() const;

    Int floor() const;
    Int ceil() const;
    double to_double() const;
    std::string str() const;

    QuadRat operator-() const;
    QuadRat& operator+=(const QuadRat& o);
    QuadRat& operator-=(const QuadRat& o);
    QuadRat& operator*=(const QuadRat& o);
    QuadRat& operator/=(const QuadRat& o);

    friend QuadRat operator+(QuadRat a, const QuadRat& b) { return a += b; }
    friend QuadRat operator-(QuadRat a, const QuadRat& b) { return a -= b; }
    friend QuadRat operator*(QuadRat a, const QuadRat& b) { return a *= b; }
    friend QuadRat operator/(QuadRat a, const QuadRat& b) { return a /= b; }

    friend bool operator==(const QuadRat& a, const QuadRat& b);
    friend std::strong_ordering operator<=>(const QuadRat& a, const QuadRat& b);

private:
    void normalize();
    // Discriminant shared by a and b; throws on a genuine mismatch.
    static Int common_disc(const QuadRat& a, const QuadRat& b);

    Rat p_{0};
    Rat q_{0};
    Int d_{1};
};

std::ostream& operator<<(std::ostream& os, const QuadRat& v);

// Exact comparison of two values of one extension. Throws PreconditionError
// ("incompatible extensions") when both carry surds of different D.
std::strong_ordering quad_cmp(const QuadRat& u, const QuadRat& v);

// Comparison that also accepts values from two different extensions.
std::strong_ordering compare_across(const QuadRat& u, const QuadRat& v);

QuadRat abs(const QuadRat& v);
QuadRat min(const QuadRat& a, const QuadRat& b);
QuadRat max(const QuadRat& a, const QuadRat& b);

// "p/q", "-3", "p/q + r/s*sqrt(D)", "sqrt(2)", "1 - 2*sqrt(3)", ...
Rat parse_rat(std::string_view text);
QuadRat parse_quad(std::string_view text);

std::string rat_str(const Rat& r);

} // namespace cbsg
