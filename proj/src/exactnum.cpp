#include "cbsg/exactnum.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

namespace cbsg {

Rat make_rat(long num, long den)
{
    if (den == 0)
        throw PreconditionError("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Int floor_rat(const Rat& x)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Int ceil_rat(const Rat& x)
{
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Int rat_floor_sqrt(const Rat& x)
{
    if (sgn(x) < 0)
        throw PreconditionError("negative radicand");
    // floor(sqrt(n/d)) = floor(isqrt(n*d)/d)
    Int nd = x.get_num() * x.get_den();
    Int s = sqrt(nd);
    Int n;
    mpz_fdiv_q(n.get_mpz_t(), s.get_mpz_t(), x.get_den_mpz_t());
    // exact correction, cheap and keeps the contract obvious
    while (Rat(n * n) > x)
        --n;
    while (Rat((n + 1) * (n + 1)) <= x)
        ++n;
    return n;
}

std::optional<Rat> is_rational_square(const Rat& x)
{
    if (sgn(x) < 0)
        return std::nullopt;
    if (mpz_perfect_square_p(x.get_num_mpz_t()) == 0 || mpz_perfect_square_p(x.get_den_mpz_t()) == 0)
        return std::nullopt;
    Rat r(sqrt(x.get_num()), sqrt(x.get_den()));
    r.canonicalize();
    return r;
}

std::int64_t to_i64(const Int& v)
{
    if (!mpz_fits_slong_p(v.get_mpz_t()))
        throw PreconditionError("integer out of 64-bit range: " + v.get_str());
    return v.get_si();
}

namespace {

// Trial division is only worth it while the cube root stays small. Past
// that we strip small primes and the remaining part may keep a square
// factor; it is still not a perfect square, which is all the arithmetic
// needs.
constexpr unsigned long kTrialCap = 2'000'000;

}

Int square_free_part(const Int& n, Int* factor)
{
    if (sgn(n) <= 0)
        throw PreconditionError("square_free_part needs a positive integer");
    Int rest = n;
    Int f = 1;
    Int limit = 1;
    {
        Int c;
        mpz_root(c.get_mpz_t(), n.get_mpz_t(), 3);
        limit = c + 1;
    }
    unsigned long cap = kTrialCap;
    if (limit < cap)
        cap = limit.get_ui();
    Int odd = 1; // small primes left with an odd exponent
    for (unsigned long p = 2; p <= cap; p += (p == 2 ? 1 : 2)) {
        // a cofactor below p^3 has at most two prime factors, all >= p
        if (rest < Int(p) * p * p)
            break;
        unsigned long e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        for (unsigned long k = 0; k < e / 2; ++k)
            f *= p;
        if (e % 2 == 1)
            odd *= p;
    }
    // the cofactor has at most two prime factors left, so it is
    // square-free unless it is a square
    if (mpz_perfect_square_p(rest.get_mpz_t()) != 0) {
        f *= sqrt(rest);
        rest = 1;
    }
    rest *= odd;
    if (factor)
        *factor = f;
    return rest;
}

QuadRat::QuadRat(const Rat& p, const Rat& q, const Int& D) : p_(p), q_(q), d_(D)
{
    if (sgn(D) <= 0)
        throw PreconditionError("discriminant must be positive");
    normalize();
}

void QuadRat::normalize()
{
    if (sgn(q_) == 0) {
        d_ = 1;
        return;
    }
    Int f;
    Int sf = square_free_part(d_, &f);
    q_ *= f;
    d_ = sf;
    if (d_ == 1) {
        p_ += q_;
        q_ = 0;
    }
}

QuadRat QuadRat::sqrt_of(const Rat& x)
{
    if (sgn(x) < 0)
        throw PreconditionError("negative radicand");
    if (sgn(x) == 0)
        return QuadRat();
    // sqrt(n/d) = sqrt(n*d)/d
    return QuadRat(Rat(0), Rat(1, 1) / Rat(x.get_den()), x.get_num() * x.get_den());
}

Int QuadRat::common_disc(const QuadRat& a, const QuadRat& b)
{
    if (a.is_rational())
        return b.d_;
    if (b.is_rational() || a.d_ == b.d_)
        return a.d_;
    throw PreconditionError("incompatible extensions");
}

int QuadRat::sign() const
{
    int sp = sgn(p_);
    int sq = sgn(q_);
    if (sq == 0)
        return sp;
    if (sp == 0 || sp == sq)
        return sq;
    Rat lhs = p_ * p_;
    Rat rhs = q_ * q_ * Rat(d_);
    if (lhs > rhs)
        return sp;
    if (lhs < rhs)
        return sq;
    return 0;
}

QuadRat QuadRat::conj() const
{
    QuadRat r = *this;
    r.q_ = -r.q_;
    return r;
}

Rat QuadRat::norm() const
{
    return p_ * p_ - q_ * q_ * Rat(d_);
}

Int QuadRat::floor() const
{
    if (is_rational())
        return floor_rat(p_);
    Int n = rat_floor_sqrt(q_ * q_ * Rat(d_));
    Int m = floor_rat(p_) + (sgn(q_) > 0 ? n : Int(-n - 1));
    while ((*this - QuadRat(Rat(m + 1))).sign() >= 0)
        ++m;
    while ((*this - QuadRat(Rat(m))).sign() < 0)
        --m;
    return m;
}

Int QuadRat::ceil() const
{
    return -((-*this).floor());
}

double QuadRat::to_double() const
{
    double v = p_.get_d();
    if (!is_rational())
        v += q_.get_d() * std::sqrt(d_.get_d());
    return v;
}

std::string rat_str(const Rat& r)
{
    return r.get_str();
}

std::string QuadRat::str() const
{
    if (is_rational())
        return rat_str(p_);
    std::string surd = "sqrt(" + d_.get_str() + ")";
    Rat aq = ::abs(q_);
    std::string tail = aq == 1 ? surd : rat_str(aq) + "*" + surd;
    if (sgn(p_) == 0)
        return (sgn(q_) < 0 ? "-" : "") + tail;
    return rat_str(p_) + (sgn(q_) < 0 ? " - " : " + ") + tail;
}

QuadRat QuadRat::operator-() const
{
    QuadRat r = *this;
    r.p_ = -r.p_;
    r.q_ = -r.q_;
    return r;
}

QuadRat& QuadRat::operator+=(const QuadRat& o)
{
    d_ = common_disc(*this, o);
    p_ += o.p_;
    q_ += o.q_;
    if (sgn(q_) == 0)
        d_ = 1;
    return *this;
}

QuadRat& QuadRat::operator-=(const QuadRat& o)
{
    return *this += -o;
}

QuadRat& QuadRat::operator*=(const QuadRat& o)
{
    Int D = common_disc(*this, o);
    Rat p = p_ * o.p_ + q_ * o.q_ * Rat(D);
    Rat q = p_ * o.q_ + q_ * o.p_;
    p_ = p;
    q_ = q;
    d_ = sgn(q_) == 0 ? Int(1) : D;
    return *this;
}

QuadRat& QuadRat::operator/=(const QuadRat& o)
{
    if (o.sign() == 0)
        throw PreconditionError("division by zero");
    Rat n = o.norm();
    *this *= o.conj();
    p_ /= n;
    q_ /= n;
    return *this;
}

bool operator==(const QuadRat& a, const QuadRat& b)
{
    return quad_cmp(a, b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const QuadRat& a, const QuadRat& b)
{
    return quad_cmp(a, b);
}

std::ostream& operator<<(std::ostream& os, const QuadRat& v)
{
    return os << v.str();
}

std::strong_ordering quad_cmp(const QuadRat& u, const QuadRat& v)
{
    int s = (u - v).sign();
    if (s < 0)
        return std::strong_ordering::less;
    if (s > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::strong_ordering compare_across(const QuadRat& u, const QuadRat& v)
{
    if (u.is_rational() || v.is_rational() || u.disc() == v.disc())
        return quad_cmp(u, v);
    // sign of s - y with s = u - v.rat (in D1) and y = v.surd*sqrt(D2)
    QuadRat s = u - QuadRat(v.rat_part());
    int ss = s.sign();
    int sy = sgn(v.surd_part());
    auto from_int = [](int x) {
        return x < 0 ? std::strong_ordering::less
                     : (x > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    };
    if (ss != sy)
        return from_int(ss > sy ? 1 : -1);
    // same sign, both nonzero (sy != 0 since v is irrational)
    QuadRat s2 = s * s;
    Rat y2 = v.surd_part() * v.surd_part() * Rat(v.disc());
    int c = (s2 - QuadRat(y2)).sign();
    return from_int(ss > 0 ? c : -c);
}

QuadRat abs(const QuadRat& v)
{
    return v.sign() < 0 ? -v : v;
}

QuadRat min(const QuadRat& a, const QuadRat& b)
{
    return b < a ? b : a;
}

QuadRat max(const QuadRat& a, const QuadRat& b)
{
    return a < b ? b : a;
}

namespace {

class NumberScanner {
public:
    explicit NumberScanner(std::string_view s)
    {
        for (char c : s)
            if (!std::isspace(static_cast<unsigned char>(c)))
                text_ += c;
    }

    QuadRat parse()
    {
        if (text_.empty())
            fail("empty number");
        QuadRat acc;
        bool any_surd = false;
        Int disc = 1;
        bool first = true;
        while (pos_ < text_.size() || first) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            QuadRat term = parse_term();
            if (!term.is_rational()) {
                if (any_surd && term.disc() != disc)
                    fail("mixed square roots");
                any_surd = true;
                disc = term.disc();
            }
            acc += sign > 0 ? term : -term;
        }
        return acc;
    }

private:
    [[noreturn]] void fail(const std::string& why) const
    {
        throw ParseError("bad number '" + text_ + "': " + why);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool at_sqrt() const { return text_.compare(pos_, 5, "sqrt(") == 0; }

    Int parse_int()
    {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            fail("expected digits");
        return Int(text_.substr(start, pos_ - start));
    }

    Rat parse_ratlit()
    {
        Int n = parse_int();
        Int d = 1;
        if (peek() == '/' && !(pos_ + 1 < text_.size() && text_.compare(pos_ + 1, 5, "sqrt(") == 0)) {
            ++pos_;
            d = parse_int();
            if (d == 0)
                fail("zero denominator");
        }
        Rat r(n, d);
        r.canonicalize();
        return r;
    }

    QuadRat parse_sqrt()
    {
        pos_ += 5;
        Int D = parse_int();
        if (peek() != ')')
            fail("missing ')'");
        ++pos_;
        if (D == 0)
            return QuadRat();
        return QuadRat(Rat(0), Rat(1), D);
    }

    // rat | rat*sqrt(D) | sqrt(D) | sqrt(D)/q
    QuadRat parse_term()
    {
        if (at_sqrt()) {
            QuadRat s = parse_sqrt();
            if (peek() == '/') {
                ++pos_;
                Int d = parse_int();
                if (d == 0)
                    fail("zero denominator");
                s /= QuadRat(Rat(d));
            }
            return s;
        }
        Rat c = parse_ratlit();
        if (peek() == '*') {
            ++pos_;
            if (!at_sqrt())
                fail("expected sqrt after '*'");
            return QuadRat(c) * parse_sqrt();
        }
        return QuadRat(c);
    }

    std::string text_;
    std::size_t pos_ = 0;
};

}

QuadRat parse_quad(std::string_view text)
{
    return NumberScanner(text).parse();
}

Rat parse_rat(std::string_view text)
{
    QuadRat q = parse_quad(text);
    if (!q.is_rational())
        throw ParseError("expected a rational number, got '" + std::string(text) + "'");
    return q.rat_part();
}

} // namespace cbsg
