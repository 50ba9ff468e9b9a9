#pragma once

#include "mtv/rational.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace mtv {

/// Dense univariate polynomial over Q, coefficient index = degree.
/// The zero polynomial has an empty coefficient vector.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs);

    static RationalPoly monomial(Rational c, std::size_t degree);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    const Rational& leading() const { return coeffs_.back(); }

    RationalPoly& operator+=(const RationalPoly& o);
    RationalPoly& operator-=(const RationalPoly& o);
    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator*(RationalPoly a, const Rational& s);

    friend bool operator==(const RationalPoly& a, const RationalPoly& b) = default;

    /// Euclidean division; throws DomainError when divisor is zero.
    std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& divisor) const;
    RationalPoly mod(const RationalPoly& divisor) const { return divmod(divisor).second; }

    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Monic N-th cyclotomic polynomial, obtained by dividing x^N - 1 by the
/// cyclotomic polynomials of the proper divisors of N. Memoized.
const RationalPoly& cyclotomic_polynomial(unsigned n);

/// Euler's totient.
unsigned totient(unsigned n);

}  // namespace mtv
