#pragma once

// Thin RAII wrapper over mpfr_t plus a directed-rounding real interval.

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace hcert::exact {

class Real {
public:
    explicit Real(mpfr_prec_t prec = 128);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    static Real from(long v, mpfr_prec_t prec = 128);
    static Real from(double v, mpfr_prec_t prec = 128);
    /// Correctly rounded in the requested direction.
    static Real from(const mpz_class& v, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
    static Real from_string(const std::string& s, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    /// Decimal scientific string with `digits` significant digits.
    std::string to_string(int digits, mpfr_rnd_t rnd = MPFR_RNDN) const;

    friend int compare(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

private:
    mpfr_t v_;
};

/// Closed real interval [lo, hi] with outward rounding on every operation.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec = 128);
    Interval(Real lo, Real hi);
    static Interval point(long v, mpfr_prec_t prec = 128);
    static Interval of(const mpz_class& v, mpfr_prec_t prec = 128);
    /// log 2.
    static Interval log2_const(mpfr_prec_t prec = 128);
    /// log |v| for nonzero v.
    static Interval log_abs(const mpz_class& v, mpfr_prec_t prec = 128);

    const Real& lo() const { return lo_; }
    const Real& hi() const { return hi_; }
    mpfr_prec_t prec() const { return lo_.prec(); }

    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator-() const;
    /// Multiplication by a nonnegative interval only.
    Interval scale_nonneg(const Interval& o) const;
    Interval mul_si(long k) const;
    Interval div_si(long k) const;
    /// Natural log of an interval with lo > 0.
    Interval log() const;
    /// max(0, log x) for an interval with lo >= 0.
    Interval log_plus() const;
    /// Smallest enclosing interval of both.
    Interval hull(const Interval& o) const;
    /// Enlarges both endpoints by r >= 0.
    Interval widen(const Real& r) const;

    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    /// Midpoint rounded to nearest and a radius rounded up covering [lo, hi].
    void mid_rad(Real& mid, Real& rad) const;

private:
    Real lo_, hi_;
};

}  // namespace hcert::exact
