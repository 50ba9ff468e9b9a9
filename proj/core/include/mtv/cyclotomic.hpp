#pragma once

#include "mtv/poly.hpp"
#include "mtv/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mtv {

/// Element of Q(zeta_N), stored as a polynomial in zeta_N of degree below
/// phi(N), i.e. reduced modulo the N-th cyclotomic polynomial. In that basis an
/// element is rational exactly when every coefficient past index 0 vanishes.
class CycloElem {
public:
    /// Zero of Q(zeta_N).
    explicit CycloElem(unsigned order);
    CycloElem(unsigned order, const Rational& value);

    /// zeta_N^e for any integer e (negative exponents wrap modulo N).
    static CycloElem root_power(unsigned order, long e);
    /// Reduces an arbitrary polynomial in zeta_N.
    static CycloElem from_poly(unsigned order, const RationalPoly& p);

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_rational() const;
    /// Constant term when is_rational(), otherwise absent.
    std::optional<Rational> as_rational() const;

    CycloElem& operator+=(const CycloElem& o);
    CycloElem& operator-=(const CycloElem& o);
    CycloElem& operator*=(const CycloElem& o);
    CycloElem& operator*=(const Rational& s);
    friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
    friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
    friend CycloElem operator*(CycloElem a, const CycloElem& b) { return a *= b; }
    friend CycloElem operator*(CycloElem a, const Rational& s) { return a *= s; }
    CycloElem operator-() const;

    friend bool operator==(const CycloElem& a, const CycloElem& b) = default;

    /// Complex conjugate: zeta_N -> zeta_N^(N-1).
    CycloElem conj() const;

    std::string to_string() const;

private:
    RationalPoly as_poly() const;
    void check_same_field(const CycloElem& o) const;

    unsigned order_;
    std::vector<Rational> coeffs_;  // length phi(order)
};

/// z^e by square-and-multiply, reducing after every product.
CycloElem cyclo_pow(const CycloElem& z, unsigned long e);

struct RealPart {
    CycloElem real_part;  ///< (z + conj z) / 2
    std::optional<Rational> as_rational;
};

RealPart cyclo_real_rational(const CycloElem& z);

/// (z - conj z) / 2, i.e. i * Im(z).
CycloElem cyclo_imag_part(const CycloElem& z);

}  // namespace mtv
