#pragma once

#include "mtv/pi_value.hpp"
#include "mtv/rational.hpp"

#include <mpfr.h>

#include <string>

namespace mtv {

/// Owning handle for an mpfr_t.
class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Mpfr(const Mpfr& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Mpfr(Mpfr&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Mpfr& operator=(const Mpfr& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Mpfr& operator=(Mpfr&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Mpfr() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

private:
    mpfr_t v_;
};

/// Precision used for radii. Radii are always rounded upward.
inline constexpr mpfr_prec_t kRadiusBits = 64;

/// Real ball [center - radius, center + radius] that is guaranteed to contain
/// the value it represents. Every operation rounds the center to nearest and
/// folds the rounding error, plus the input radii, into an upward-rounded
/// radius.
class BallReal {
public:
    /// Exact zero at the given center precision.
    explicit BallReal(mpfr_prec_t prec);
    BallReal(Mpfr center, Mpfr radius);

    static BallReal from_rational(const Rational& q, mpfr_prec_t prec);
    static BallReal pi(mpfr_prec_t prec);
    /// Encloses coef * pi^weight.
    static BallReal from_pi_value(const PiValue& v, mpfr_prec_t prec);

    const Mpfr& center() const { return center_; }
    const Mpfr& radius() const { return radius_; }
    mpfr_prec_t precision() const { return center_.precision(); }

    BallReal operator-() const;
    friend BallReal operator+(const BallReal& a, const BallReal& b);
    friend BallReal operator-(const BallReal& a, const BallReal& b);
    friend BallReal operator*(const BallReal& a, const BallReal& b);
    friend BallReal operator*(const BallReal& a, const Rational& s);

    /// Adds `extra` (an upper bound, rounded upward) to the radius.
    BallReal widened(const Mpfr& extra) const;

    /// True when the whole of `inner` lies inside this ball.
    bool contains(const BallReal& inner) const;
    bool contains_zero() const;
    /// 2 * radius, rounded upward.
    Mpfr width() const;
    /// width() <= 2^exp2
    bool width_below_pow2(long exp2) const;

    /// Center in scientific notation with `digits` significant digits.
    std::string center_string(int digits) const;
    /// Radius with 6 significant digits, rounded upward.
    std::string radius_string() const;
    double center_double() const { return mpfr_get_d(center_.get(), MPFR_RNDN); }
    double radius_double() const { return mpfr_get_d(radius_.get(), MPFR_RNDU); }

private:
    Mpfr center_;
    Mpfr radius_;
};

/// Upper bound on |x - RN(x)| given the computed RN(x) at precision p:
/// 2^{-p} |RN(x)|, rounded upward into radius precision.
Mpfr rounding_error_bound(const Mpfr& rounded);

}  // namespace mtv
