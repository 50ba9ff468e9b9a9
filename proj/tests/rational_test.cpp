#include "mtv/errors.hpp"
#include "mtv/pi_value.hpp"
#include "mtv/rational.hpp"

#include <gtest/gtest.h>

#include <random>

using mtv::BigInt;
using mtv::PiValue;
using mtv::Rational;

TEST(Rational, CanonicalForm) {
    EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
    EXPECT_EQ(Rational(10, 5).to_string(), "2");
    EXPECT_TRUE(Rational(0, 7).is_zero());
    EXPECT_EQ(Rational(0, 7).denominator(), 1);
    EXPECT_THROW(Rational(1, 0), mtv::DomainError);
}

TEST(Rational, ParseRoundTrip) {
    for (const char* s : {"0", "-1", "17/161280", "-3/2", "123456789012345678901234567890"})
        EXPECT_EQ(Rational::parse(s).to_string(), s);
    EXPECT_EQ(Rational::parse("4/6"), Rational(2, 3));
    EXPECT_THROW(Rational::parse("1/0"), mtv::DomainError);
    EXPECT_THROW(Rational::parse("x"), mtv::DomainError);
    EXPECT_THROW(Rational::parse(""), mtv::DomainError);
}

TEST(Rational, Arithmetic) {
    EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
    EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
    EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
    EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
    EXPECT_THROW(Rational(1) / Rational(0), mtv::DomainError);
    EXPECT_LT(Rational(-1, 2), Rational(1, 3));
}

TEST(Rational, Combinatorics) {
    EXPECT_EQ(mtv::binomial(10, 3), 120);
    EXPECT_EQ(mtv::binomial(3, 5), 0);
    EXPECT_EQ(mtv::factorial(0), 1);
    EXPECT_EQ(mtv::factorial(20), BigInt("2432902008176640000"));
    EXPECT_EQ(mtv::pow2(70), BigInt("1180591620717411303424"));
}

TEST(PiValue, TextGrammar) {
    EXPECT_EQ(PiValue(Rational(1, 384), 4).to_string(), "1/384 * pi^4");
    EXPECT_EQ(PiValue(Rational(-3), 2).to_string(), "-3 * pi^2");
    EXPECT_EQ(PiValue(Rational(5, 7), 0).to_string(), "5/7");
    EXPECT_EQ(PiValue::zero(6).to_string(), "0 * pi^6");
    EXPECT_EQ(PiValue::one().to_string(), "1");
}

TEST(PiValue, ParseIsLossless) {
    for (const PiValue& v : {PiValue(Rational(17, 161280), 8), PiValue(Rational(-61, 3), 6), PiValue(Rational(2), 0),
                             PiValue::zero(4)})
        EXPECT_EQ(PiValue::parse(v.to_string()), v);
    EXPECT_THROW(PiValue::parse("1/2 * pi"), mtv::DomainError);
    EXPECT_THROW(PiValue::parse("1/2 * e^2"), mtv::DomainError);
}

TEST(PiValue, AdditionNeedsEqualWeight) {
    const PiValue a(Rational(1, 8), 2);
    const PiValue b(Rational(1, 96), 4);
    EXPECT_THROW(pi_add(a, b), mtv::HomogeneityError);
    EXPECT_EQ(pi_add(a, a), PiValue(Rational(1, 4), 2));
    EXPECT_EQ(a * b, PiValue(Rational(1, 768), 6));
}

TEST(PiValue, AdditionIsAssociativeAndCommutative) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
    for (int i = 0; i < 200; ++i) {
        const PiValue a(Rational(num(rng), den(rng)), 6);
        const PiValue b(Rational(num(rng), den(rng)), 6);
        const PiValue c(Rational(num(rng), den(rng)), 6);
        EXPECT_EQ(pi_add(a, b), pi_add(b, a));
        EXPECT_EQ(pi_add(pi_add(a, b), c), pi_add(a, pi_add(b, c)));
    }
}
