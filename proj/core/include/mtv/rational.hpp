#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace mtv {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
/// Zero is stored as 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}                  // NOLINT(google-explicit-constructor)
    Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& v) : q_(v) {}          // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den);

    /// Parses "p", "-p" or "p/q". Throws DomainError on malformed input or q = 0.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// "p/q", or "p" when q = 1.
    std::string to_string() const;

private:
    static Rational from_mpq(mpq_class q);
    mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Exact binomial coefficient C(n, k); zero when k > n.
BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);
/// 2^e as a big integer.
BigInt pow2(unsigned long e);

}  // namespace mtv
