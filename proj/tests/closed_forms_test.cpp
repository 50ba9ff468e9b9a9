#include "mtv/closed_forms.hpp"
#include "mtv/errors.hpp"
#include "mtv/symfun.hpp"

#include <gtest/gtest.h>

using mtv::PiValue;
using mtv::Rational;
namespace closed = mtv::closed;
namespace oracle = mtv::oracle;

namespace {

PiValue pv(long num, long den, unsigned w) { return PiValue(Rational(num, den), w); }

}  // namespace

TEST(EvenStrings, PrintedSpecials) {
    EXPECT_EQ(closed::t_string_even_arg(6, 1), pv(1, 960, 6));
    EXPECT_EQ(closed::t_string_even_arg(8, 1), pv(17, 161280, 8));
    EXPECT_EQ(closed::tstar_string_even_arg(4, 1), pv(1, 96, 4));
    EXPECT_EQ(closed::t2_string(2), pv(1, 384, 4));
    EXPECT_EQ(closed::tstar2_string(2), pv(5, 384, 4));
}

TEST(EvenStrings, MatchOracleForArgumentTwo) {
    for (unsigned n = 0; n <= 12; ++n) {
        EXPECT_EQ(closed::t2_string(n), oracle::t_string_oracle(2, n)) << n;
        EXPECT_EQ(closed::tstar2_string(n), oracle::tstar_string_oracle(2, n)) << n;
    }
}

TEST(EvenStrings, MatchOracleForHigherArguments) {
    for (unsigned two_m : {4u, 6u, 8u, 10u, 12u}) {
        for (unsigned n = 1; n <= 3; ++n) {
            EXPECT_EQ(closed::t_string_even_arg(two_m, n), oracle::t_string_oracle(two_m, n)) << two_m << ' ' << n;
            EXPECT_EQ(closed::t_string_sign_sum(two_m, n), oracle::t_string_oracle(two_m, n)) << two_m << ' ' << n;
            EXPECT_EQ(closed::tstar_string_even_arg(two_m, n), oracle::tstar_string_oracle(two_m, n))
                << two_m << ' ' << n;
        }
    }
}

TEST(EvenStrings, CyclotomicSumsAreReal) {
    for (unsigned m : {2u, 3u, 4u, 5u, 6u}) {
        for (unsigned n = 1; n <= 3; ++n) {
            const auto full = closed::sign_vector_sum(m, n, false);
            EXPECT_TRUE(full.imaginary_zero);
            EXPECT_TRUE(full.rational.has_value());
            const auto sec = closed::secant_product_coefficient(m, n);
            EXPECT_TRUE(sec.imaginary_zero) << m << ' ' << n;
            EXPECT_TRUE(sec.rational.has_value()) << m << ' ' << n;
            if (m % 2 == 1) {
                EXPECT_TRUE(closed::odd_subset_sum(m, n).rational.has_value());
            } else {
                EXPECT_TRUE(closed::sign_vector_sum(m, n, true).rational.has_value());
            }
        }
    }
}

TEST(EvenStrings, StringExactDispatch) {
    EXPECT_EQ(closed::string_exact(2, 0, false), PiValue::one());
    EXPECT_EQ(closed::string_exact(8, 1, false), pv(17, 161280, 8));
    EXPECT_EQ(closed::string_exact(4, 2, true), oracle::tstar_string_oracle(4, 2));
    EXPECT_THROW(closed::string_exact(3, 1, false), mtv::UnsupportedExactError);
}

TEST(SignVector, Parity) {
    EXPECT_TRUE(closed::SignVector::from_mask(3, 0).even_parity());
    EXPECT_FALSE(closed::SignVector::from_mask(3, 1).even_parity());
    EXPECT_TRUE(closed::SignVector::from_mask(3, 5).even_parity());
    EXPECT_EQ(closed::SignVector::from_mask(3, 2).entries(), (std::vector<std::int8_t>{1, -1, 1}));
}

TEST(EvenSums, BothFormsMatchOracle) {
    for (unsigned n = 1; n <= 10; ++n) {
        for (unsigned k = 1; k <= n; ++k) {
            const auto t = closed::sum_even(n, k, false);
            EXPECT_EQ(t.value, oracle::sum_oracle(2, n, k, false)) << n << ' ' << k;
            EXPECT_EQ(closed::sum_even(n, k, false, closed::SumVariant::Zhao).value, t.value) << n << ' ' << k;
            EXPECT_EQ(closed::sum_even(n, k, true).value, oracle::sum_oracle(2, n, k, true)) << n << ' ' << k;
        }
    }
    EXPECT_THROW(closed::sum_even(3, 2, true, closed::SumVariant::Zhao), mtv::UnsupportedExactError);
    EXPECT_THROW(closed::sum_even(3, 4, false), mtv::DomainError);
}

TEST(EvenSums, SmallValues) {
    EXPECT_EQ(closed::sum_even(2, 1, false).value, pv(1, 96, 4));
    EXPECT_EQ(closed::sum_even(2, 2, false).value, pv(1, 384, 4));
    EXPECT_EQ(closed::sum_even(2, 2, true).value, pv(5, 384, 4));
    const auto v = closed::sum_even(3, 2, true);
    EXPECT_EQ(v.kind, closed::SumKind::TStar);
    EXPECT_EQ(v.m, 2u);
    EXPECT_EQ(closed::to_string(v.kind), "Tstar");
}

TEST(Weight4Sums, MatchOracle) {
    EXPECT_EQ(closed::weight4_inner(0), 1);
    for (unsigned n = 1; n <= 5; ++n) {
        for (unsigned k = 1; k <= n; ++k) {
            EXPECT_EQ(closed::sum_weight4(n, k, false).value, oracle::sum_oracle(4, n, k, false)) << n << ' ' << k;
            EXPECT_EQ(closed::sum_weight4(n, k, true).value, oracle::sum_oracle(4, n, k, true)) << n << ' ' << k;
        }
    }
}

TEST(SumExact, HigherEvenArguments) {
    for (unsigned a : {6u, 8u}) {
        for (unsigned n = 1; n <= 3; ++n) {
            for (unsigned k = 1; k <= n; ++k) {
                EXPECT_EQ(closed::sum_exact(a, n, k, false).value, oracle::sum_oracle(a, n, k, false));
                EXPECT_EQ(closed::sum_exact(a, n, k, true).value, oracle::sum_oracle(a, n, k, true));
            }
        }
    }
    EXPECT_THROW(closed::sum_exact(3, 2, 1, false), mtv::UnsupportedExactError);
}

TEST(SumExact, HurwitzScaling) {
    EXPECT_EQ(closed::hurwitz_scaled(2, 1, 1), pv(1, 2, 2));
    EXPECT_EQ(closed::hurwitz_scaled(2, 2, 2), pv(1, 24, 4));
}
