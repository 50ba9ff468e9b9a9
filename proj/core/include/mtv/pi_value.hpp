#pragma once

#include "mtv/rational.hpp"

#include <ostream>
#include <string>
#include <string_view>

namespace mtv {

/// Exact value coef * pi^weight. Addition is only defined between values of
/// equal weight; multiplication adds weights.
class PiValue {
public:
    PiValue() = default;
    PiValue(Rational coef, unsigned weight) : coef_(std::move(coef)), weight_(weight) {}

    static PiValue one() { return PiValue(Rational(1), 0); }
    static PiValue zero(unsigned weight) { return PiValue(Rational(0), weight); }

    const Rational& coef() const { return coef_; }
    unsigned weight() const { return weight_; }
    bool is_zero() const { return coef_.is_zero(); }

    PiValue operator-() const { return PiValue(-coef_, weight_); }
    PiValue& operator+=(const PiValue& o);
    PiValue& operator-=(const PiValue& o);
    PiValue& operator*=(const PiValue& o);
    PiValue& operator*=(const Rational& s);

    friend PiValue operator+(PiValue a, const PiValue& b) { return a += b; }
    friend PiValue operator-(PiValue a, const PiValue& b) { return a -= b; }
    friend PiValue operator*(PiValue a, const PiValue& b) { return a *= b; }
    friend PiValue operator*(PiValue a, const Rational& s) { return a *= s; }
    friend PiValue operator*(const Rational& s, PiValue a) { return a *= s; }

    friend bool operator==(const PiValue& a, const PiValue& b) = default;

    /// Canonical text form `<sign><num>/<den> * pi^<w>`; "/1" and " * pi^0"
    /// are elided.
    std::string to_string() const;
    /// Inverse of to_string(). Throws DomainError on malformed text.
    static PiValue parse(std::string_view text);

private:
    Rational coef_{0};
    unsigned weight_ = 0;
};

/// Exact sum; throws HomogeneityError when the weights differ.
PiValue pi_add(const PiValue& a, const PiValue& b);

std::ostream& operator<<(std::ostream& os, const PiValue& v);

}  // namespace mtv
