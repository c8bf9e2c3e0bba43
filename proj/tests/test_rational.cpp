#include <gtest/gtest.h>

#include <cmath>

#include "llike/error.hpp"
#include "llike/rational.hpp"

using namespace llike;

TEST(Rational, ReducesAndNormalizesSign) {
    Rational r(6, -4);
    EXPECT_EQ(r.str(), "-3/2");
    EXPECT_EQ(Rational(10, 5).str(), "2");
    EXPECT_THROW(Rational(1, 0), Error);
}

TEST(Rational, Arithmetic) {
    const Rational a(1, 6), b(1, 36);
    EXPECT_EQ((Rational(1) + a + b).str(), "43/36");
    EXPECT_EQ((a * b).str(), "1/216");
    EXPECT_EQ((a - a).str(), "0");
    EXPECT_TRUE(b < a);
    EXPECT_TRUE(a <= a);
}

TEST(Rational, OverflowIsReported) {
    const i128 big = static_cast<i128>(1) << 100;
    const Rational a(1, big - 1), b(1, big + 1);
    EXPECT_FALSE(Rational::checked_add(a, b).has_value());
    EXPECT_THROW(a + b, Error);
}

TEST(RationalSum, StaysExactForSmallDenominators) {
    RationalSum s;
    for (std::uint64_t p : {2, 3, 5, 7}) s.add_reciprocal(p);
    ASSERT_TRUE(s.is_exact());
    EXPECT_EQ(s.exact()->str(), "247/210");
    EXPECT_EQ(s.error_bound(), 0.0);
}

TEST(RationalSum, FallsBackToCompensatedSum) {
    // Harmonic numbers: the exact denominator passes 2^127 near n = 90.
    RationalSum s;
    constexpr std::uint64_t N = 200000;
    for (std::uint64_t n = 1; n <= N; ++n) s.add_reciprocal(n);
    // Euler-Maclaurin; truncation error below 1e-25 at this N.
    const long double n = N;
    const long double reference = std::log(n) + 0.57721566490153286061L + 1 / (2 * n) -
                                  1 / (12 * n * n) + 1 / (120 * n * n * n * n);
    EXPECT_FALSE(s.is_exact());
    EXPECT_GT(s.error_bound(), 0.0);
    EXPECT_LE(std::fabs(s.value() - static_cast<double>(reference)), s.error_bound() + 1e-15);
}
