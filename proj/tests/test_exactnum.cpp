#include <gtest/gtest.h>

#include "support.hpp"

using namespace ccfrac;
using testing_support::Rng;

namespace {

QuadElem q(const char* s) { return parse_exact(s); }

TEST(ExactNum, DivisionByRho)
{
    const QuadElem rho = q("(1+sqrt(-3))/2");
    EXPECT_EQ(QuadElem(1) / rho, QuadElem(Rational(1, 2), Rational(-1, 2), -3));
    EXPECT_EQ(QuadElem(1) / rho, rho.conj());
}

TEST(ExactNum, GaussianProductsAndInverse)
{
    EXPECT_EQ(q("(1-3*i)/4") * QuadElem(4), q("1-3*i"));
    // 1 / ((1-3i)/4) = 4 (1+3i) / 10
    EXPECT_EQ(QuadElem(1) / q("(1-3*i)/4"), QuadElem(Rational(2, 5), Rational(6, 5), -1));
}

TEST(ExactNum, Errors)
{
    try {
        (void)(QuadElem(1) / QuadElem(0));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
    }
    try {
        (void)(q("i") + q("sqrt(-3)"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::MixedRadicand);
    }
    EXPECT_THROW(QuadElem(Rational(0), Rational(1), 16), Error);
}

TEST(ExactNum, FloorReal)
{
    EXPECT_EQ(floor_real(q("-101732/28505 + 1/171030*i")), -4);
    EXPECT_EQ(floor_real(q("(-1+sqrt(5))/2")), 0);
    EXPECT_EQ(floor_real(QuadElem(Rational(7, 2))), 3);
    EXPECT_EQ(floor_real(q("-sqrt(2)")), -2);
    EXPECT_EQ(floor_real(q("10*sqrt(2)")), 14);
}

TEST(ExactNum, FloorRealBracketsExactly)
{
    Rng rng(11);
    for (int t = 0; t < 2000; ++t) {
        const long n = std::vector<long>{2, 3, 5, 7, 13}[rng.uniform(0, 4)];
        const QuadElem a(rng.rational(500, 30), rng.rational(200, 30), n);
        const Integer f = floor_real(a);
        ASSERT_GE(compare_real(a, Rational(f)), 0);
        ASSERT_LT(compare_real(a, Rational(f + 1)), 0);
    }
}

TEST(ExactNum, ParseExamples)
{
    const QuadElem z = q("-101732/28505 + 1/171030*i");
    EXPECT_EQ(z.rational_part(), Rational(-101732, 28505));
    EXPECT_EQ(z.surd_part(), Rational(1, 171030));
    EXPECT_EQ(z.radicand(), -1);
    EXPECT_EQ(q("(1+sqrt(-3))/2"), QuadElem(Rational(1, 2), Rational(1, 2), -3));
    EXPECT_EQ(q("5"), QuadElem(5));
    EXPECT_TRUE(q("5").is_rational());
    EXPECT_EQ(q("-1/2*i"), QuadElem(Rational(0), Rational(-1, 2), -1));
    EXPECT_EQ(q("3 - 2*sqrt(5)"), QuadElem(Rational(3), Rational(-2), 5));
}

TEST(ExactNum, ParseErrorsCarryOffset)
{
    for (const char* bad : {"", "1 +", "sqrt(4)", "1/0", "(1+i", "2*x", "sqrt(-3)+i"}) {
        EXPECT_THROW(parse_exact(bad), Error) << bad;
    }
    try {
        parse_exact("12 + ?");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 5u);
    }
    try {
        parse_exact("sqrt(-3)", -1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::MixedRadicand);
    }
}

TEST(ExactNum, FormatIsCanonicalAndReparses)
{
    EXPECT_EQ(format(q("(1-3*i)/4")), "(1-3*i)/4");
    EXPECT_EQ(format(q("(1+sqrt(-3))/2")), "(1+sqrt(-3))/2");
    EXPECT_EQ(format(q("-1/2*i")), "-1/2*i");
    EXPECT_EQ(format(q("0")), "0");
    Rng rng(12);
    for (int t = 0; t < 3000; ++t) {
        const long n = std::vector<long>{-1, -3, -7, 2, 5}[rng.uniform(0, 4)];
        const QuadElem a(rng.rational(10000, 500), rng.rational(10000, 500), n);
        const std::string s = format(a);
        ASSERT_EQ(parse_exact(s), a) << s;
        ASSERT_EQ(format(parse_exact(s)), s);
    }
}

TEST(ExactNum, FieldAxiomsOnRandomPairs)
{
    Rng rng(13);
    for (long n : {-1L, -3L, -7L, 2L, 5L}) {
        for (int t = 0; t < 10000; ++t) {
            const QuadElem a(rng.rational(1000, 100), rng.rational(1000, 100), n);
            const QuadElem b(rng.rational(1000, 100), rng.rational(1000, 100), n);
            if (a.is_zero()) continue;
            ASSERT_EQ((a * b) * a.inverse(), b);
            ASSERT_EQ((a + b) - b, a);
            ASSERT_EQ((a * b).norm(), a.norm() * b.norm());
        }
    }
}

TEST(ExactNum, SignWithRoot)
{
    EXPECT_EQ(q("1 - sqrt(2)").sign(), -1);
    EXPECT_EQ(q("-1 + sqrt(2)").sign(), 1);
    EXPECT_EQ(q("3/2 - sqrt(2)").sign(), 1);
    EXPECT_EQ(QuadElem(0).sign(), 0);
}

} // namespace
