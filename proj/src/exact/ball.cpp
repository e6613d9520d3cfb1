#include "hcert/exact/ball.hpp"

#include <stdexcept>

namespace hcert::exact {

namespace {

// Adds the round-to-nearest error bound of x (half an ulp, bounded by
// 2^(exp(x) - prec)) to rad.
void add_rounding(Real& rad, const Real& x, int ternary)
{
    if (ternary == 0 || x.is_zero()) return;
    Real e(kRadiusPrec);
    mpfr_set_ui_2exp(e.get(), 1, mpfr_get_exp(x.get()) - x.prec(), MPFR_RNDU);
    mpfr_add(rad.get(), rad.get(), e.get(), MPFR_RNDU);
}

Real radius_zero() { return Real(kRadiusPrec); }

}  // namespace

ComplexBall::ComplexBall(mpfr_prec_t prec) : re_(prec), im_(prec), rad_(kRadiusPrec) {}

ComplexBall::ComplexBall(Real re, Real im, Real rad) : re_(std::move(re)), im_(std::move(im)), rad_(kRadiusPrec)
{
    if (im_.prec() != re_.prec()) {
        Real t(re_.prec());
        int tern = mpfr_set(t.get(), im_.get(), MPFR_RNDN);
        im_ = std::move(t);
        add_rounding(rad_, im_, tern);
    }
    if (rad.sign() < 0) throw std::invalid_argument("negative ball radius");
    mpfr_add(rad_.get(), rad_.get(), rad.get(), MPFR_RNDU);
}

ComplexBall ComplexBall::exact(const mpz_class& v, mpfr_prec_t prec)
{
    ComplexBall b(prec);
    int t = mpfr_set_z(b.re_.get(), v.get_mpz_t(), MPFR_RNDN);
    add_rounding(b.rad_, b.re_, t);
    return b;
}

ComplexBall ComplexBall::exact(long v, mpfr_prec_t prec)
{
    ComplexBall b(prec);
    int t = mpfr_set_si(b.re_.get(), v, MPFR_RNDN);
    add_rounding(b.rad_, b.re_, t);
    return b;
}

ComplexBall ComplexBall::operator+(const ComplexBall& o) const
{
    ComplexBall r(prec());
    int t1 = mpfr_add(r.re_.get(), re_.get(), o.re_.get(), MPFR_RNDN);
    int t2 = mpfr_add(r.im_.get(), im_.get(), o.im_.get(), MPFR_RNDN);
    mpfr_add(r.rad_.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
    add_rounding(r.rad_, r.re_, t1);
    add_rounding(r.rad_, r.im_, t2);
    return r;
}

ComplexBall ComplexBall::operator-(const ComplexBall& o) const
{
    ComplexBall r(prec());
    int t1 = mpfr_sub(r.re_.get(), re_.get(), o.re_.get(), MPFR_RNDN);
    int t2 = mpfr_sub(r.im_.get(), im_.get(), o.im_.get(), MPFR_RNDN);
    mpfr_add(r.rad_.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
    add_rounding(r.rad_, r.re_, t1);
    add_rounding(r.rad_, r.im_, t2);
    return r;
}

ComplexBall ComplexBall::operator*(const ComplexBall& o) const
{
    ComplexBall r(prec());
    int t1 = mpfr_fmms(r.re_.get(), re_.get(), o.re_.get(), im_.get(), o.im_.get(), MPFR_RNDN);
    int t2 = mpfr_fmma(r.im_.get(), re_.get(), o.im_.get(), im_.get(), o.re_.get(), MPFR_RNDN);
    // |a||rb| + |b||ra| + ra*rb
    Real ma = mid_abs_upper(), mb = o.mid_abs_upper();
    Real acc(kRadiusPrec), tmp(kRadiusPrec);
    mpfr_mul(acc.get(), ma.get(), o.rad_.get(), MPFR_RNDU);
    mpfr_mul(tmp.get(), mb.get(), rad_.get(), MPFR_RNDU);
    mpfr_add(acc.get(), acc.get(), tmp.get(), MPFR_RNDU);
    mpfr_mul(tmp.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
    mpfr_add(r.rad_.get(), acc.get(), tmp.get(), MPFR_RNDU);
    add_rounding(r.rad_, r.re_, t1);
    add_rounding(r.rad_, r.im_, t2);
    return r;
}

ComplexBall ComplexBall::inverse() const
{
    const Real m_lo = abs_lower();
    if (m_lo.sign() <= 0) throw std::domain_error("division by a ball containing zero");
    ComplexBall r(prec());
    // Approximate conj(z)/|z|^2 at the midpoint.
    Real n2(prec());
    mpfr_fmma(n2.get(), re_.get(), re_.get(), im_.get(), im_.get(), MPFR_RNDN);
    mpfr_div(r.re_.get(), re_.get(), n2.get(), MPFR_RNDN);
    mpfr_div(r.im_.get(), im_.get(), n2.get(), MPFR_RNDN);
    mpfr_neg(r.im_.get(), r.im_.get(), MPFR_RNDN);

    // |1/m - w| = |1 - m w| / |m|, with 1 - m w enclosed rigorously.
    ComplexBall mid_only(re_, im_, radius_zero());
    ComplexBall w_only(r.re_, r.im_, radius_zero());
    ComplexBall defect = ComplexBall::exact(1, prec()) - mid_only * w_only;
    Real mabs_lo(kRadiusPrec);
    {
        Real h(prec());
        mpfr_hypot(h.get(), re_.get(), im_.get(), MPFR_RNDD);
        mpfr_set(mabs_lo.get(), h.get(), MPFR_RNDD);
    }
    Real e1 = defect.abs_upper();
    mpfr_div(e1.get(), e1.get(), mabs_lo.get(), MPFR_RNDU);
    // |1/z - 1/m| <= rad / (|m| (|m| - rad)).
    Real e2(kRadiusPrec), den(kRadiusPrec);
    mpfr_sub(den.get(), mabs_lo.get(), rad_.get(), MPFR_RNDD);
    mpfr_mul(den.get(), den.get(), mabs_lo.get(), MPFR_RNDD);
    if (den.sign() <= 0) throw std::domain_error("division by a ball containing zero");
    mpfr_div(e2.get(), rad_.get(), den.get(), MPFR_RNDU);
    mpfr_add(r.rad_.get(), e1.get(), e2.get(), MPFR_RNDU);
    return r;
}

ComplexBall ComplexBall::operator/(const ComplexBall& o) const { return *this * o.inverse(); }

ComplexBall ComplexBall::conj() const
{
    ComplexBall r = *this;
    mpfr_neg(r.im_.get(), r.im_.get(), MPFR_RNDN);
    return r;
}

ComplexBall ComplexBall::pow(unsigned long k) const
{
    ComplexBall result = ComplexBall::exact(1, prec());
    ComplexBall base = *this;
    while (k) {
        if (k & 1ul) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

void ComplexBall::inflate(const Real& e)
{
    if (e.sign() < 0) throw std::invalid_argument("negative inflation");
    mpfr_add(rad_.get(), rad_.get(), e.get(), MPFR_RNDU);
}

Real ComplexBall::mid_abs_upper() const
{
    Real h(kRadiusPrec);
    mpfr_hypot(h.get(), re_.get(), im_.get(), MPFR_RNDU);
    return h;
}

Real ComplexBall::abs_upper() const
{
    Real h = mid_abs_upper();
    mpfr_add(h.get(), h.get(), rad_.get(), MPFR_RNDU);
    return h;
}

Real ComplexBall::abs_lower() const
{
    Real h(prec());
    mpfr_hypot(h.get(), re_.get(), im_.get(), MPFR_RNDD);
    mpfr_sub(h.get(), h.get(), rad_.get(), MPFR_RNDD);
    if (h.sign() < 0) mpfr_set_zero(h.get(), 1);
    return h;
}

Interval ComplexBall::abs() const
{
    Real lo = abs_lower();
    Real hi(prec());
    mpfr_hypot(hi.get(), re_.get(), im_.get(), MPFR_RNDU);
    mpfr_add(hi.get(), hi.get(), rad_.get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

bool ComplexBall::contains_zero() const { return abs_lower().sign() <= 0; }

bool ComplexBall::overlaps(const ComplexBall& o) const
{
    // Disjoint iff |m1 - m2| > r1 + r2, decided with a lower bound on the distance.
    Real dx(prec()), dy(prec()), d(prec()), rsum(kRadiusPrec);
    mpfr_sub(dx.get(), re_.get(), o.re_.get(), MPFR_RNDN);
    mpfr_sub(dy.get(), im_.get(), o.im_.get(), MPFR_RNDN);
    // Each difference is within one ulp; subtract that slack.
    Real slack(kRadiusPrec);
    add_rounding(slack, dx, 1);
    add_rounding(slack, dy, 1);
    mpfr_hypot(d.get(), dx.get(), dy.get(), MPFR_RNDD);
    mpfr_sub(d.get(), d.get(), slack.get(), MPFR_RNDD);
    mpfr_add(rsum.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
    return !(d > rsum);
}

bool ComplexBall::meets_real_axis() const
{
    Real a(kRadiusPrec);
    mpfr_abs(a.get(), im_.get(), MPFR_RNDD);
    return a <= rad_;
}

std::string ComplexBall::to_string(int digits) const
{
    return "(" + re_.to_string(digits) + " + " + im_.to_string(digits) + "i) +/- " + rad_.to_string(6, MPFR_RNDU);
}

ComplexBall evaluate(const IntPolynomial& p, const ComplexBall& z)
{
    const mpfr_prec_t prec = z.prec();
    if (p.is_zero()) return ComplexBall(prec);
    ComplexBall acc = ComplexBall::exact(p.leading(), prec);
    for (int i = p.degree() - 1; i >= 0; --i) {
        acc = acc * z;
        const mpz_class& c = p.coeff(static_cast<std::size_t>(i));
        if (c != 0) acc = acc + ComplexBall::exact(c, prec);
    }
    return acc;
}

}  // namespace hcert::exact
