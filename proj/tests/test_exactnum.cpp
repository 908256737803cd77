#include "cbsg/exactnum.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace cbsg;
using cbsg::testing::Rng;
using cbsg::testing::random_rat;
using cbsg::testing::uniform;

namespace {

mpf_class approx(const QuadRat& v)
{
    mpf_class p(v.rat_part(), 700), q(v.surd_part(), 700), d(v.disc(), 700);
    return p + q * sqrt(d);
}

QuadRat random_quad(Rng& rng, long D)
{
    return QuadRat(random_rat(rng, -20, 20, 12), random_rat(rng, -5, 5, 12), D);
}

}

TEST(ExactNum, SquareFreePart)
{
    Int f;
    EXPECT_EQ(square_free_part(Int(12), &f), 3);
    EXPECT_EQ(f, 2);
    EXPECT_EQ(square_free_part(Int(49)), 1);
    EXPECT_EQ(square_free_part(Int(2 * 3 * 5 * 7)), 210);
    EXPECT_EQ(square_free_part(Int(1000003) * 1000003 * 5), 5);
    EXPECT_THROW(square_free_part(Int(0)), PreconditionError);
}

TEST(ExactNum, NormalizesSurds)
{
    QuadRat a(Rat(0), Rat(1), Int(8)); // sqrt(8) = 2 sqrt(2)
    EXPECT_EQ(a.disc(), 2);
    EXPECT_EQ(a.surd_part(), 2);
    QuadRat b(Rat(1), Rat(3), Int(9)); // 1 + 3*3
    EXPECT_TRUE(b.is_rational());
    EXPECT_EQ(b, QuadRat(10));
    EXPECT_EQ(QuadRat::sqrt_of(Rat(9, 4)), QuadRat(Rat(3, 2)));
    QuadRat s = QuadRat::sqrt_of(Rat(1, 2)); // sqrt(2)/2
    EXPECT_EQ(s.disc(), 2);
    EXPECT_EQ(s.surd_part(), Rat(1, 2));
}

TEST(ExactNum, FloorAndCeilNearIntegers)
{
    QuadRat r2 = QuadRat::sqrt_of(Rat(2));
    EXPECT_EQ(r2.floor(), 1);
    EXPECT_EQ(r2.ceil(), 2);
    // 1e6*sqrt(2) lies between consecutive integers very close to one side
    QuadRat big = QuadRat(Rat(1000000)) * r2;
    EXPECT_EQ(big.floor(), 1414213);
    EXPECT_EQ((-big).floor(), -1414214);
    // (sqrt(2) - 1)(sqrt(2) + 1) = 1 exactly
    EXPECT_EQ((r2 - QuadRat(1)) * (r2 + QuadRat(1)), QuadRat(1));
    EXPECT_EQ(QuadRat(Rat(7, 2)).floor(), 3);
    EXPECT_EQ(QuadRat(Rat(-7, 2)).ceil(), -3);
}

TEST(ExactNum, SignAndOrderAgreeWithHighPrecision)
{
    Rng rng(20240611);
    for (int k = 0; k < 1000; ++k) {
        const long D = std::vector<long>{2, 3, 5, 6, 7, 10}[k % 6];
        QuadRat u = random_quad(rng, D), v = random_quad(rng, D);
        mpf_class du = approx(u), dv = approx(v);
        ASSERT_EQ(u.sign(), sgn(du)) << u;
        ASSERT_EQ(u < v, du < dv) << u << " vs " << v;
        ASSERT_EQ(u == v, du == dv);
        mpf_class sum = approx(u + v) - (du + dv);
        mpf_class prod = approx(u * v) - du * dv;
        ASSERT_LT(abs(sum), mpf_class(1e-150, 700));
        ASSERT_LT(abs(prod), mpf_class(1e-150, 700));
        if (v.sign() != 0) {
            mpf_class quo = approx(u / v) - du / dv;
            ASSERT_LT(abs(quo), mpf_class(1e-120, 700));
        }
        // floor is exact: floor <= u < floor + 1
        Int f = u.floor();
        ASSERT_LE(QuadRat(f), u);
        ASSERT_LT(u, QuadRat(Int(f + 1)));
    }
}

TEST(ExactNum, ConjugateAndNorm)
{
    QuadRat x(Rat(3), Rat(2), Int(5));
    EXPECT_EQ(x.conj(), QuadRat(Rat(3), Rat(-2), Int(5)));
    EXPECT_EQ(x.norm(), Rat(9 - 20));
    EXPECT_EQ(x * x.conj(), QuadRat(x.norm()));
}

TEST(ExactNum, MixedExtensionsAreRejectedUnlessRational)
{
    QuadRat a = QuadRat::sqrt_of(Rat(2)), b = QuadRat::sqrt_of(Rat(3));
    EXPECT_THROW(a + b, PreconditionError);
    EXPECT_THROW((void)(a < b), PreconditionError);
    EXPECT_EQ(compare_across(a, b), std::strong_ordering::less);
    EXPECT_EQ(compare_across(b, QuadRat(Rat(7, 4))), std::strong_ordering::less);
    // a rational value combines with any extension
    EXPECT_NO_THROW(a + QuadRat(Rat(1, 3)));
    EXPECT_NO_THROW(b * QuadRat(4));
}

TEST(ExactNum, Parsing)
{
    EXPECT_EQ(parse_rat("7/3"), Rat(7, 3));
    EXPECT_EQ(parse_rat(" -4/6 "), Rat(-2, 3));
    EXPECT_EQ(parse_rat("5"), Rat(5));
    EXPECT_EQ(parse_quad("1/2 + 3/4*sqrt(2)"), QuadRat(Rat(1, 2), Rat(3, 4), Int(2)));
    EXPECT_EQ(parse_quad("1/2+3/4*sqrt(2)"), parse_quad("1/2 + 3/4 * sqrt(2)"));
    EXPECT_EQ(parse_quad("-1 - sqrt(3)"), QuadRat(Rat(-1), Rat(-1), Int(3)));
    EXPECT_EQ(parse_quad("sqrt(2)/10"), QuadRat(Rat(0), Rat(1, 10), Int(2)));
    EXPECT_EQ(parse_quad("2 - sqrt(8)"), QuadRat(Rat(2), Rat(-2), Int(2)));
    EXPECT_EQ(parse_quad("sqrt(4)"), QuadRat(2));
    EXPECT_THROW(parse_rat("1/0"), ParseError);
    EXPECT_THROW(parse_rat("abc"), ParseError);
    EXPECT_THROW(parse_rat("sqrt(2)"), ParseError);
    EXPECT_THROW(parse_quad("sqrt(2) + sqrt(3)"), ParseError);
    EXPECT_THROW(parse_quad("1 +"), ParseError);
    EXPECT_THROW(parse_quad("sqrt(-2)"), ParseError);
}

TEST(ExactNum, RoundTripThroughText)
{
    Rng rng(7);
    for (int k = 0; k < 200; ++k) {
        QuadRat v = random_quad(rng, std::vector<long>{2, 3, 11}[k % 3]);
        ASSERT_EQ(parse_quad(v.str()), v) << v.str();
    }
}

TEST(ExactNum, Helpers)
{
    EXPECT_EQ(floor_rat(Rat(-1, 2)), -1);
    EXPECT_EQ(ceil_rat(Rat(-1, 2)), 0);
    EXPECT_EQ(rat_floor_sqrt(Rat(17, 2)), 2);
    EXPECT_THROW(rat_floor_sqrt(Rat(-1)), PreconditionError);
    EXPECT_EQ(is_rational_square(Rat(9, 16)), Rat(3, 4));
    EXPECT_FALSE(is_rational_square(Rat(7, 4)).has_value());
    EXPECT_THROW(to_i64(Int("100000000000000000000")), PreconditionError);
}
