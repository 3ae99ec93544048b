#include <gtest/gtest.h>

#include "support.hpp"

using namespace ccfrac;
using testing_support::Rng;

namespace {

QuadElem q(const char* s) { return parse_exact(s); }

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

TEST(Cutting, SqrtTwoPrefix)
{
    const CuttingSequence cs = cutting_sequence(q("sqrt(2)"), 7);
    EXPECT_EQ(cs.exps, ints({1, 2, 2, 2}));
    EXPECT_EQ(cs.terminal, Terminal::Truncated);
}

TEST(Cutting, Half)
{
    const CuttingSequence cs = cutting_sequence(q("1/2"));
    EXPECT_EQ(cs.exps, ints({0, 1}));
    EXPECT_EQ(cs.terminal, Terminal::RationalEndpoint);
    EXPECT_EQ(cf_expand(q("1/2")).coeffs(), ints({0, 2}));
    EXPECT_EQ(relate_cut_cf(q("1/2")), CutRelation::PlusOne);
}

TEST(Cutting, ImaginaryAxis)
{
    const CuttingSequence cs = cutting_sequence(q("2*i"));
    EXPECT_EQ(cs.exps, ints({0}));
    EXPECT_EQ(cs.terminal, Terminal::OnEdge);
    EXPECT_EQ(relate_cut_cf(q("2*i")), CutRelation::Exact);
}

TEST(Cutting, Errors)
{
    for (const char* bad : {"-1+i", "-1/2", "1-i", "-i"}) {
        try {
            cutting_sequence(q(bad));
            ADD_FAILURE() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::OutOfHalfPlane) << bad;
        }
    }
    EXPECT_THROW(locate_fan(q("3/2")), Error);
    EXPECT_THROW(locate_fan(q("1-i")), Error);
    try {
        farey_neighbor_case({1, 3}, {2, 3});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotNeighbors);
    }
}

// Every edge L^{c0} R^{c1} ... I of weight <= 14: the point M(2i) on it
// descends along exactly that word.
TEST(Cutting, EdgeWordsMatchDescent)
{
    std::size_t checked = 0;
    for (unsigned n = 1; n <= 14; ++n) {
        for (const auto& body : enumerate_lr_words(n)) {
            const Mat2 m = lr_product(body);
            const QuadElem z = m.apply(q("2*i"));
            const CuttingSequence cs = cutting_sequence(z);
            ASSERT_EQ(cs.exps, body) << format(z);
            ASSERT_EQ(cs.terminal, Terminal::OnEdge);
            ASSERT_EQ(cs.edge, m);
            ++checked;
        }
    }
    EXPECT_EQ(checked, (1u << 15) - 2);
}

TEST(Cutting, RelationAlwaysHolds)
{
    Rng rng(71);
    int counts[3] = {0, 0, 0};
    for (int t = 0; t < 10000; ++t) {
        QuadElem z = rng.gaussian(300, 40, true);
        z = QuadElem(abs(z.re()), abs(z.surd_part()), -1);
        if (z.re() == 0 && z.im_squared() == 0) continue;
        if (z.re() == 0 && t % 2) z = z + QuadElem(rng.uniform(1, 5));
        if (z.re() == 0) continue;
        const CutRelation r = relate_cut_cf(z);
        ++counts[static_cast<int>(r)];
        if (z.is_rational() || z.im_sign() == 0) {
            ASSERT_EQ(r, CutRelation::PlusOne) << format(z);
            ASSERT_EQ(cutting_sequence(z).terminal, Terminal::RationalEndpoint);
        }
    }
    EXPECT_GT(counts[0], 0);
    EXPECT_GT(counts[1], 0);
    EXPECT_GT(counts[2], 0);
}

TEST(Cutting, PointsOnEdgesAreExact)
{
    Rng rng(72);
    for (int t = 0; t < 2000; ++t) {
        const auto words = enumerate_lr_words(static_cast<unsigned>(rng.uniform(1, 9)));
        const auto& body = words[rng.uniform(0, static_cast<long>(words.size()) - 1)];
        const QuadElem w(0, rng.rational(50, 20), -1);
        if (w.im_sign() <= 0) continue;
        const QuadElem z = lr_product(body).apply(w);
        ASSERT_EQ(relate_cut_cf(z), CutRelation::Exact) << format(z);
    }
}

TEST(Cutting, SurdPrefixesMatchPeriodicExpansion)
{
    for (const char* s : {"sqrt(2)", "sqrt(3)", "(1+sqrt(5))/2", "sqrt(7)", "3+sqrt(13)", "(2+sqrt(10))/3"}) {
        const QuadElem x = q(s);
        const PeriodicCF p = periodic_cf(x);
        const CuttingSequence cs = cutting_sequence(x, 200);
        ASSERT_EQ(cs.terminal, Terminal::Truncated);
        // the last run may still be growing
        for (std::size_t j = 0; j + 1 < cs.exps.size(); ++j) {
            ASSERT_EQ(cs.exps[j], p.coefficient(j)) << s << " at " << j;
        }
        ASSERT_LE(cs.exps.back(), p.coefficient(cs.exps.size() - 1));
    }
}

TEST(Cutting, DescentDeepensMonotonically)
{
    for (const char* s : {"sqrt(2)", "sqrt(3)", "7/5 + 1/1000*i"}) {
        Integer prev = 0;
        for (std::size_t k = 1; k <= 40; ++k) {
            const CuttingSequence cs = cutting_sequence(q(s), k);
            const Integer d = std::max(cs.edge.c(), cs.edge.d());
            ASSERT_GE(d, prev) << s << " " << k;
            prev = d;
        }
    }
}

TEST(Cutting, FanExamples)
{
    EXPECT_EQ(locate_fan(q("2*i")), Fraction(1, 0));
    const QuadElem rho(Rational(1, 2), Rational(1, 2), -3);
    const QuadElem r1 = rho - QuadElem(1);
    const QuadElem z = (QuadElem(3483) * r1 - QuadElem(778)) / (QuadElem(1258) * r1 - QuadElem(281));
    const ContinuedFraction cf = cf_expand(z);
    EXPECT_EQ(cf.coeffs(), ints({2, 1, 3, 3, 10, 2, 4}));
    EXPECT_EQ(cf.tail(), rho);
    const Fraction f = locate_fan(z);
    EXPECT_TRUE(f == Fraction(3483, 1258) || f == Fraction(778, 281) || f == Fraction(4261, 1539)) << f.str();
    for (const Fraction& pq : {Fraction(3483, 1258), Fraction(778, 281), Fraction(4261, 1539)}) {
        const auto shape = fan_shape(cf.coeffs(), cf_expand(QuadElem(pq.value())).coeffs());
        EXPECT_TRUE(shape.has_value()) << pq.str();
    }
}

TEST(Cutting, FanShapesOnRandomPoints)
{
    Rng rng(73);
    for (int t = 0; t < 5000; ++t) {
        const QuadElem z = rng.gaussian(400, 60);
        if (z.im_sign() <= 0) continue;
        const Fraction f = locate_fan(z);
        if (f.is_infinite()) {
            ASSERT_TRUE(in_region(z - QuadElem(floor_real(z)), Region::F) ||
                        in_region(z - QuadElem(Integer(floor_real(z) + 1)), Region::F) || z.im_squared() >= 1)
                << format(z);
            continue;
        }
        const auto shape = fan_shape(cf_expand(z).coeffs(), cf_expand(QuadElem(f.value())).coeffs());
        ASSERT_TRUE(shape.has_value()) << format(z) << " in " << f.str();
    }
}

TEST(Cutting, FordCirclesAgreeWithTail)
{
    Rng rng(74);
    int inside = 0;
    for (int t = 0; t < 4000; ++t) {
        // points near the real axis so small Ford circles are hit
        const QuadElem z(rng.rational(300, 60), make_rational(rng.uniform(1, 400), rng.uniform(1, 2000)), -1);
        const auto loc = locate_ford_circle(z);
        // the circle "at 1/0" is the half plane Im >= 1
        auto holds = [&](const Fraction& f) { return f.is_infinite() ? z.im_squared() >= 1 : in_ford_circle(z, f); };
        if (loc) {
            ++inside;
            ASSERT_TRUE(holds(*loc)) << format(z) << " " << loc->str();
        }
        // brute force over small denominators
        const Rational x = z.re();
        for (long den = 1; den <= 40; ++den) {
            const Integer c = floor_real(QuadElem(x * den));
            for (Integer num = c - 1; num <= c + 1; ++num) {
                const Fraction pq(num, den);
                if (in_ford_circle(z, pq)) {
                    ASSERT_TRUE(loc.has_value()) << format(z) << " misses " << pq.str();
                    // Ford circles only meet at tangency points
                    if (!(*loc == pq)) ASSERT_TRUE(holds(*loc));
                }
            }
        }
        if (z.im_squared() >= 1) ASSERT_TRUE(loc && loc->is_infinite());
    }
    EXPECT_GT(inside, 100);
}

TEST(Cutting, FareyNeighborExamples)
{
    EXPECT_EQ(farey_neighbor_case({3483, 1258}, {778, 281}), FareyCase::AppendM);
    EXPECT_EQ(farey_neighbor_case({0, 1}, {1, 1}), FareyCase::PlusMinusOne);
    // 4261/1539 = [2,1,3,3,10,2,5] against 3483/1258 = [2,1,3,3,10,2,4]
    EXPECT_EQ(farey_neighbor_case({3483, 1258}, {4261, 1539}), FareyCase::PlusMinusOne);
    // 2/5 = [0,2,2] and 1/3 = [0,3]
    EXPECT_EQ(farey_neighbor_case({1, 3}, {2, 5}), FareyCase::DecrementTwo);
}

TEST(Cutting, SternBrocotNeighbours)
{
    Rng rng(75);
    int counts[4] = {0, 0, 0, 0};
    for (int t = 0; t < 3000; ++t) {
        // random walk down the Stern-Brocot tree between a/b and c/d
        Integer a = rng.uniform(-3, 3), b = 1, c = a + 1, d = 1;
        const long depth = rng.uniform(1, 25);
        for (long s = 0; s < depth; ++s) {
            const Integer mp = a + c, mq = b + d;
            if (rng.coin()) {
                a = mp;
                b = mq;
            } else {
                c = mp;
                d = mq;
            }
        }
        const Fraction lo(a, b), hi(c, d), mid(a + c, b + d);
        for (auto [x, y] : {std::pair{lo, hi}, std::pair{lo, mid}, std::pair{mid, hi}}) {
            const FareyCase fc = farey_neighbor_case(x, y);
            ++counts[static_cast<int>(fc)];
        }
    }
    for (int k = 0; k < 4; ++k) EXPECT_GT(counts[k], 0) << k;
}

} // namespace
