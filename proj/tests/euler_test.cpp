#include "mtv/errors.hpp"
#include "mtv/euler.hpp"
#include "mtv/rational.hpp"

#include <gtest/gtest.h>

using mtv::BigInt;
using mtv::Rational;

TEST(Euler, KnownValues) {
    const auto t = mtv::euler_numbers(10);
    EXPECT_EQ(t.e2n(0), 1);
    EXPECT_EQ(t.e2n(1), -1);
    EXPECT_EQ(t.e2n(2), 5);
    EXPECT_EQ(t.e2n(3), -61);
    EXPECT_EQ(t.e2n(4), 1385);
    EXPECT_EQ(t.e2n(10), BigInt("370371188237525"));
    EXPECT_THROW((void)t.e2n(11), mtv::DomainError);
}

TEST(Euler, SignsAlternate) {
    const auto t = mtv::euler_numbers(40);
    for (std::size_t n = 0; n <= 40; ++n) EXPECT_EQ(sgn(t.e2n(n)), n % 2 == 0 ? 1 : -1) << n;
}

TEST(Euler, SecantTimesCosineIsOne) {
    // sec x = sum (-1)^n E_2n x^2n/(2n)!, cos x = sum (-1)^n x^2n/(2n)!
    const std::size_t N = 40;
    const auto t = mtv::euler_numbers(N);
    for (std::size_t n = 0; n <= N; ++n) {
        Rational c(0);
        for (std::size_t i = 0; i <= n; ++i)
            c += Rational(t.e2n(i), mtv::factorial(2 * i)) * Rational(BigInt(1), mtv::factorial(2 * (n - i)));
        // (-1)^i (-1)^(n-i) = (-1)^n is common to every term
        EXPECT_EQ(c, Rational(n == 0 ? 1 : 0)) << n;
    }
}

TEST(Euler, PrefixStable) {
    const auto small = mtv::euler_numbers(12);
    const auto large = mtv::euler_numbers(30);
    for (std::size_t n = 0; n <= 12; ++n) EXPECT_EQ(small.e2n(n), large.e2n(n));
    EXPECT_EQ(mtv::euler_table(5).e2n(5), large.e2n(5));
    EXPECT_EQ(mtv::euler_e2n(30), large.e2n(30));
}

TEST(Euler, SeedRejectsWrongValues) {
    auto values = mtv::euler_numbers(6).values();
    EXPECT_TRUE(mtv::seed_euler_table(values));
    values[3] = 61;
    EXPECT_FALSE(mtv::seed_euler_table(values));
    EXPECT_EQ(mtv::euler_e2n(3), -61);
}
