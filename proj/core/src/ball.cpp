#include "mtv/ball.hpp"

#include "mtv/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace mtv {

Mpfr rounding_error_bound(const Mpfr& rounded) {
    Mpfr e(kRadiusBits);
    mpfr_abs(e.get(), rounded.get(), MPFR_RNDU);
    mpfr_mul_2si(e.get(), e.get(), -static_cast<long>(rounded.precision()), MPFR_RNDU);
    return e;
}

namespace {

// Rounding error of an mpfr call given its ternary result.
Mpfr op_error(const Mpfr& result, int ternary) {
    if (ternary == 0) return Mpfr(kRadiusBits);
    return rounding_error_bound(result);
}

Mpfr abs_up(const Mpfr& x) {
    Mpfr a(kRadiusBits);
    mpfr_abs(a.get(), x.get(), MPFR_RNDU);
    return a;
}

mpfr_prec_t common_prec(const BallReal& a, const BallReal& b) {
    return std::max(a.precision(), b.precision());
}

}  // namespace

BallReal::BallReal(mpfr_prec_t prec) : center_(prec), radius_(kRadiusBits) {}

BallReal::BallReal(Mpfr center, Mpfr radius) : center_(std::move(center)), radius_(kRadiusBits) {
    if (mpfr_sgn(radius.get()) < 0) throw DomainError("negative ball radius");
    mpfr_set(radius_.get(), radius.get(), MPFR_RNDU);
}

BallReal BallReal::from_rational(const Rational& q, mpfr_prec_t prec) {
    Mpfr c(prec);
    const int t = mpfr_set_q(c.get(), q.raw().get_mpq_t(), MPFR_RNDN);
    Mpfr r = op_error(c, t);
    return BallReal(std::move(c), std::move(r));
}

BallReal BallReal::pi(mpfr_prec_t prec) {
    Mpfr c(prec);
    const int t = mpfr_const_pi(c.get(), MPFR_RNDN);
    Mpfr r = op_error(c, t);
    return BallReal(std::move(c), std::move(r));
}

BallReal BallReal::from_pi_value(const PiValue& v, mpfr_prec_t prec) {
    BallReal result = from_rational(v.coef(), prec);
    if (v.weight() == 0 || v.is_zero()) return result;
    BallReal p = pi(prec);
    BallReal power = from_rational(Rational(1), prec);
    for (unsigned e = v.weight(); e != 0; e >>= 1) {
        if (e & 1U) power = power * p;
        if (e > 1) p = p * p;
    }
    return result * power;
}

BallReal BallReal::operator-() const {
    BallReal r = *this;
    mpfr_neg(r.center_.get(), r.center_.get(), MPFR_RNDN);
    return r;
}

BallReal operator+(const BallReal& a, const BallReal& b) {
    Mpfr c(common_prec(a, b));
    const int t = mpfr_add(c.get(), a.center_.get(), b.center_.get(), MPFR_RNDN);
    Mpfr r = op_error(c, t);
    mpfr_add(r.get(), r.get(), a.radius_.get(), MPFR_RNDU);
    mpfr_add(r.get(), r.get(), b.radius_.get(), MPFR_RNDU);
    return BallReal(std::move(c), std::move(r));
}

BallReal operator-(const BallReal& a, const BallReal& b) { return a + (-b); }

BallReal operator*(const BallReal& a, const BallReal& b) {
    Mpfr c(common_prec(a, b));
    const int t = mpfr_mul(c.get(), a.center_.get(), b.center_.get(), MPFR_RNDN);
    Mpfr r = op_error(c, t);
    // |a_c| r_b + |b_c| r_a + r_a r_b
    Mpfr term(kRadiusBits);
    mpfr_mul(term.get(), abs_up(a.center_).get(), b.radius_.get(), MPFR_RNDU);
    mpfr_add(r.get(), r.get(), term.get(), MPFR_RNDU);
    mpfr_mul(term.get(), abs_up(b.center_).get(), a.radius_.get(), MPFR_RNDU);
    mpfr_add(r.get(), r.get(), term.get(), MPFR_RNDU);
    mpfr_mul(term.get(), a.radius_.get(), b.radius_.get(), MPFR_RNDU);
    mpfr_add(r.get(), r.get(), term.get(), MPFR_RNDU);
    return BallReal(std::move(c), std::move(r));
}

BallReal operator*(const BallReal& a, const Rational& s) {
    if (s.is_integer()) {
        // Integer scale factors are exact in the scale, so only the product rounds.
        Mpfr c(a.precision());
        const int t = mpfr_mul_z(c.get(), a.center_.get(), s.numerator().get_mpz_t(), MPFR_RNDN);
        Mpfr r = op_error(c, t);
        Mpfr scaled(kRadiusBits);
        Mpfr mag(kRadiusBits);
        mpfr_set_z(mag.get(), s.numerator().get_mpz_t(), MPFR_RNDU);
        mpfr_abs(mag.get(), mag.get(), MPFR_RNDU);
        mpfr_mul(scaled.get(), a.radius_.get(), mag.get(), MPFR_RNDU);
        mpfr_add(r.get(), r.get(), scaled.get(), MPFR_RNDU);
        return BallReal(std::move(c), std::move(r));
    }
    return a * BallReal::from_rational(s, a.precision());
}

BallReal BallReal::widened(const Mpfr& extra) const {
    BallReal r = *this;
    mpfr_add(r.radius_.get(), r.radius_.get(), extra.get(), MPFR_RNDU);
    return r;
}

bool BallReal::contains(const BallReal& inner) const {
    // |c - c_in| + r_in <= r, with the left side rounded up.
    Mpfr diff(std::max(precision(), inner.precision()) + 8);
    const int t = mpfr_sub(diff.get(), center_.get(), inner.center_.get(), MPFR_RNDN);
    Mpfr lhs = op_error(diff, t);
    mpfr_add(lhs.get(), lhs.get(), abs_up(diff).get(), MPFR_RNDU);
    mpfr_add(lhs.get(), lhs.get(), inner.radius_.get(), MPFR_RNDU);
    return mpfr_lessequal_p(lhs.get(), radius_.get()) != 0;
}

bool BallReal::contains_zero() const {
    return mpfr_lessequal_p(abs_up(center_).get(), radius_.get()) != 0;
}

Mpfr BallReal::width() const {
    Mpfr w(kRadiusBits);
    mpfr_mul_2ui(w.get(), radius_.get(), 1, MPFR_RNDU);
    return w;
}

bool BallReal::width_below_pow2(long exp2) const {
    Mpfr bound(kRadiusBits);
    mpfr_set_ui_2exp(bound.get(), 1, exp2, MPFR_RNDN);
    return mpfr_less_p(width().get(), bound.get()) != 0;
}

namespace {

std::string format(const char* fmt, int digits, mpfr_srcptr x) {
    const int n = mpfr_snprintf(nullptr, 0, fmt, digits, x);
    std::vector<char> buf(static_cast<std::size_t>(n) + 1);
    mpfr_snprintf(buf.data(), buf.size(), fmt, digits, x);
    return std::string(buf.data(), static_cast<std::size_t>(n));
}

}  // namespace

std::string BallReal::center_string(int digits) const {
    return format("%.*RNe", digits > 0 ? digits - 1 : 0, center_.get());
}

std::string BallReal::radius_string() const { return format("%.*RUe", 5, radius_.get()); }

}  // namespace mtv
