#pragma once

#include "hcert/exact/int_poly.hpp"
#include "hcert/exact/real.hpp"

#include <string>

namespace hcert::exact {

/// Precision used for radii; radii are always rounded upward.
inline constexpr mpfr_prec_t kRadiusPrec = 64;

/// Disk in C given by a midpoint and a rigorous radius: the represented
/// exact value lies within `rad` of `re + i*im`. Every operation returns a
/// ball that encloses all results of the exact operation on enclosed values.
class ComplexBall {
public:
    explicit ComplexBall(mpfr_prec_t prec = 128);
    ComplexBall(Real re, Real im, Real rad);

    static ComplexBall exact(const mpz_class& v, mpfr_prec_t prec);
    static ComplexBall exact(long v, mpfr_prec_t prec);

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    const Real& rad() const { return rad_; }
    mpfr_prec_t prec() const { return re_.prec(); }

    ComplexBall operator+(const ComplexBall& o) const;
    ComplexBall operator-(const ComplexBall& o) const;
    ComplexBall operator*(const ComplexBall& o) const;
    /// Throws std::domain_error if the divisor ball contains zero.
    ComplexBall operator/(const ComplexBall& o) const;
    ComplexBall inverse() const;
    ComplexBall conj() const;
    ComplexBall pow(unsigned long k) const;

    /// Adds e >= 0 to the radius.
    void inflate(const Real& e);

    /// Upper bound for |z| over the ball.
    Real abs_upper() const;
    /// Lower bound for |z| over the ball (zero if the ball meets the origin).
    Real abs_lower() const;
    /// Rigorous enclosure of |z| over the ball.
    Interval abs() const;
    bool contains_zero() const;
    /// Upper bound on |mid| (hypot rounded up).
    Real mid_abs_upper() const;
    bool overlaps(const ComplexBall& o) const;
    /// True if the ball meets the real axis.
    bool meets_real_axis() const;

    std::string to_string(int digits = 20) const;

private:
    Real re_, im_, rad_;
};

/// Horner evaluation of an integer polynomial at a ball.
ComplexBall evaluate(const IntPolynomial& p, const ComplexBall& z);

}  // namespace hcert::exact
