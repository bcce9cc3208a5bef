#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include <prearith/projective.hpp>

#include "oracles.hpp"

using namespace prearith;

namespace
{

BmValue bm(double v, double m)
{
    return {v, ProjectiveMagnitude(m)};
}

} // namespace

TEST(BmForward, FixedPoints)
{
    for (double m : {0.5, 1.0, 4.0, 1e6}) {
        const ProjectiveMagnitude pm(m);
        EXPECT_EQ(bm_forward(ExtendedReal::finite(0.0), pm).value(), m / 2);
        EXPECT_EQ(bm_forward(ExtendedReal::pos_inf(), pm).value(), m);
        EXPECT_EQ(bm_forward(ExtendedReal::neg_inf(), pm).value(), 0.0);
    }
}

TEST(BmForward, MatchesHighPrecisionOracle)
{
    const ProjectiveMagnitude pm(4.0);
    for (double x : {-1e6, -31.0, -2.0, -0.5, 0.25, 1.0, 2.0, 1e3}) {
        EXPECT_NEAR(bm_forward(ExtendedReal::finite(x), pm).value(), oracle::bm_forward(4.0, x), 1e-14) << x;
    }
}

TEST(BmForward, StrictlyIncreasingAndBounded)
{
    const ProjectiveMagnitude pm(3.0);
    double prev = -1.0;
    for (double x = -50.0; x <= 50.0; x += 0.125) {
        const double y = bm_forward(ExtendedReal::finite(x), pm).value();
        ASSERT_GT(y, prev);
        ASSERT_GE(y, 0.0);
        ASSERT_LE(y, 3.0);
        prev = y;
    }
    EXPECT_LE(bm_forward(ExtendedReal::finite(1e308), pm).value(), 3.0);
}

TEST(BmInverse, BoundariesByTag)
{
    EXPECT_EQ(bm_inverse(bm(2.0, 4.0)), ExtendedReal::finite(0.0));
    EXPECT_EQ(bm_inverse(bm(4.0, 4.0)), ExtendedReal::pos_inf());
    EXPECT_EQ(bm_inverse(bm(0.0, 4.0)), ExtendedReal::neg_inf());
    EXPECT_NEAR(bm_inverse(bm(3.0, 4.0)).value(), 1.0, 1e-15);
}

TEST(BmInverse, StrictlyIncreasingInside)
{
    double prev = -INFINITY;
    for (int k = 1; k < 1000; ++k) {
        const double y = bm_inverse(bm(k / 1000.0, 1.0)).value();
        ASSERT_GT(y, prev);
        prev = y;
    }
}

TEST(BmValue, RejectsValuesOutsideCarrier)
{
    EXPECT_THROW(bm(-0.1, 1.0), Error);
    EXPECT_THROW(bm(1.1, 1.0), Error);
    EXPECT_THROW(bm(std::nan(""), 1.0), Error);
}

TEST(BmAdd, Examples)
{
    EXPECT_EQ(bm_add(bm(2.0, 4.0), bm(2.0, 4.0)).value(), 2.0);
    EXPECT_NEAR(bm_add(bm(2.0, 4.0), bm(3.0, 4.0)).value(), oracle::bm_forward(4.0, 1.0), 1e-12);
    EXPECT_NEAR(bm_add(bm(2.0, 4.0), bm(3.0, 4.0)).value(), 3.0, 1e-12);
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> dist(0.0, 4.0);
    for (int i = 0; i < 1000; ++i) {
        EXPECT_EQ(bm_add(bm(4.0, 4.0), bm(dist(rng), 4.0)).value(), 4.0);
    }
    EXPECT_EQ(bm_add(bm(4.0, 4.0), bm(0.0, 4.0)).value(), 4.0);
}

TEST(BmAdd, StrictModeErrorsOnTopPlusBottom)
{
    try {
        (void)bm_add(bm(4.0, 4.0), bm(0.0, 4.0), Mode::strict);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), Errc::indeterminate_form);
    }
    EXPECT_EQ(bm_add(bm(4.0, 4.0), bm(1.0, 4.0), Mode::strict).value(), 4.0);
}

TEST(BmMul, Examples)
{
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> dist(0.0, 4.0);
    for (int i = 0; i < 200; ++i) {
        EXPECT_EQ(bm_mul(bm(2.0, 4.0), bm(dist(rng), 4.0)).value(), 2.0);
    }
    EXPECT_EQ(bm_mul(bm(2.0, 4.0), bm(4.0, 4.0)).value(), 2.0);
    EXPECT_EQ(bm_mul(bm(4.0, 4.0), bm(4.0, 4.0)).value(), 4.0);
    EXPECT_EQ(bm_mul(bm(0.0, 4.0), bm(0.0, 4.0)).value(), 4.0);
    EXPECT_EQ(bm_mul(bm(0.0, 4.0), bm(4.0, 4.0)).value(), 0.0);
    EXPECT_THROW((void)bm_mul(bm(0.0, 4.0), bm(2.0, 4.0), Mode::strict), Error);
    EXPECT_THROW((void)bm_mul(bm(4.0, 4.0), bm(2.0, 4.0), Mode::strict), Error);
}

TEST(BmOps, RejectMixedMagnitudes)
{
    EXPECT_THROW((void)bm_add(bm(1.0, 2.0), bm(1.0, 3.0)), Error);
    EXPECT_THROW((void)bm_mul(bm(1.0, 2.0), bm(1.0, 3.0)), Error);
}

TEST(BmLaws, RoundTripWithinTolerance)
{
    std::mt19937_64 rng(3);
    for (double m : {0.25, 1.0, 7.0, 1e4}) {
        std::uniform_real_distribution<double> dist(0.0, m);
        for (int i = 0; i < 2000; ++i) {
            const auto a = bm(dist(rng), m);
            ASSERT_NEAR(bm_forward(bm_inverse(a), a.magnitude()).value(), a.value(), 1e-9 * m);
        }
        EXPECT_EQ(bm_forward(bm_inverse(bm(0.0, m)), ProjectiveMagnitude(m)).value(), 0.0);
        EXPECT_EQ(bm_forward(bm_inverse(bm(m, m)), ProjectiveMagnitude(m)).value(), m);
    }
}

TEST(BmLaws, AdditionMonotoneAndCommutative)
{
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> dist(0.0, 5.0);
    for (int i = 0; i < 5000; ++i) {
        double a = dist(rng), b = dist(rng);
        const double c = dist(rng);
        if (b < a) {
            std::swap(a, b);
        }
        ASSERT_LE(bm_add(bm(a, 5), bm(c, 5)).value(), bm_add(bm(b, 5), bm(c, 5)).value());
        ASSERT_EQ(bm_add(bm(a, 5), bm(c, 5)), bm_add(bm(c, 5), bm(a, 5)));
        ASSERT_EQ(bm_mul(bm(a, 5), bm(c, 5)), bm_mul(bm(c, 5), bm(a, 5)));
    }
}

TEST(BmLaws, AdditionAssociativeAwayFromBoundary)
{
    std::mt19937_64 rng(5);
    const double m = 2.0;
    std::uniform_real_distribution<double> dist(0.01 * m, 0.99 * m);
    for (int i = 0; i < 5000; ++i) {
        const auto a = bm(dist(rng), m), b = bm(dist(rng), m), c = bm(dist(rng), m);
        ASSERT_TRUE(approx_equal(bm_add(bm_add(a, b), c), bm_add(a, bm_add(b, c)), 1e-6));
    }
}

TEST(BmLaws, TopIsIdempotent)
{
    auto acc = bm(3.0, 3.0);
    for (int i = 0; i < 10; ++i) {
        acc = bm_add(acc, bm(3.0, 3.0));
        ASSERT_EQ(acc.value(), 3.0);
    }
}
