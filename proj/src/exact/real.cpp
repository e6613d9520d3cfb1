#include "hcert/exact/real.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace hcert::exact {

Real::Real(mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

Real::Real(const Real& o)
{
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept
{
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o)
{
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept
{
    mpfr_swap(v_, o.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::from(long v, mpfr_prec_t prec)
{
    Real r(prec);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

Real Real::from(double v, mpfr_prec_t prec)
{
    Real r(prec);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    return r;
}

Real Real::from(const mpz_class& v, mpfr_prec_t prec, mpfr_rnd_t rnd)
{
    Real r(prec);
    mpfr_set_z(r.v_, v.get_mpz_t(), rnd);
    return r;
}

Real Real::from_string(const std::string& s, mpfr_prec_t prec, mpfr_rnd_t rnd)
{
    Real r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, rnd) != 0) throw std::invalid_argument("bad real literal: " + s);
    return r;
}

std::string Real::to_string(int digits, mpfr_rnd_t rnd) const
{
    if (mpfr_zero_p(v_)) return "0";
    if (!mpfr_number_p(v_)) return mpfr_nan_p(v_) ? "nan" : (mpfr_sgn(v_) > 0 ? "inf" : "-inf");
    mpfr_exp_t exp = 0;
    char* raw = mpfr_get_str(nullptr, &exp, 10, static_cast<std::size_t>(digits), v_, rnd);
    std::string s(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (!s.empty() && s[0] == '-') {
        sign = "-";
        s.erase(0, 1);
    }
    while (s.size() > 1 && s.back() == '0') s.pop_back();
    std::string out = sign + s.substr(0, 1);
    if (s.size() > 1) out += "." + s.substr(1);
    const long e = static_cast<long>(exp) - 1;
    if (e != 0) out += "e" + std::to_string(e);
    return out;
}

Interval::Interval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

Interval::Interval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi))
{
    if (lo_ > hi_) throw std::logic_error("interval with lo > hi");
}

Interval Interval::point(long v, mpfr_prec_t prec)
{
    return Interval(Real::from(v, prec), Real::from(v, prec));
}

Interval Interval::of(const mpz_class& v, mpfr_prec_t prec)
{
    return Interval(Real::from(v, prec, MPFR_RNDD), Real::from(v, prec, MPFR_RNDU));
}

Interval Interval::log2_const(mpfr_prec_t prec)
{
    Interval r(prec);
    mpfr_const_log2(r.lo_.get(), MPFR_RNDD);
    mpfr_const_log2(r.hi_.get(), MPFR_RNDU);
    return r;
}

Interval Interval::log_abs(const mpz_class& v, mpfr_prec_t prec)
{
    if (v == 0) throw std::domain_error("log of zero");
    mpz_class a = abs(v);
    return of(a, prec).log();
}

Interval Interval::operator+(const Interval& o) const
{
    Interval r(prec());
    mpfr_add(r.lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
    mpfr_add(r.hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
    return r;
}

Interval Interval::operator-(const Interval& o) const
{
    Interval r(prec());
    mpfr_sub(r.lo_.get(), lo_.get(), o.hi_.get(), MPFR_RNDD);
    mpfr_sub(r.hi_.get(), hi_.get(), o.lo_.get(), MPFR_RNDU);
    return r;
}

Interval Interval::operator-() const
{
    Interval r(prec());
    mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
    mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
    return r;
}

Interval Interval::scale_nonneg(const Interval& o) const
{
    if (lo_.sign() < 0 || o.lo_.sign() < 0) throw std::domain_error("scale_nonneg needs nonnegative intervals");
    Interval r(prec());
    mpfr_mul(r.lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
    mpfr_mul(r.hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
    return r;
}

Interval Interval::mul_si(long k) const
{
    Interval r(prec());
    if (k >= 0) {
        mpfr_mul_si(r.lo_.get(), lo_.get(), k, MPFR_RNDD);
        mpfr_mul_si(r.hi_.get(), hi_.get(), k, MPFR_RNDU);
    } else {
        mpfr_mul_si(r.lo_.get(), hi_.get(), k, MPFR_RNDD);
        mpfr_mul_si(r.hi_.get(), lo_.get(), k, MPFR_RNDU);
    }
    return r;
}

Interval Interval::div_si(long k) const
{
    if (k == 0) throw std::domain_error("division by zero");
    Interval r(prec());
    if (k > 0) {
        mpfr_div_si(r.lo_.get(), lo_.get(), k, MPFR_RNDD);
        mpfr_div_si(r.hi_.get(), hi_.get(), k, MPFR_RNDU);
    } else {
        mpfr_div_si(r.lo_.get(), hi_.get(), k, MPFR_RNDD);
        mpfr_div_si(r.hi_.get(), lo_.get(), k, MPFR_RNDU);
    }
    return r;
}

Interval Interval::log() const
{
    if (lo_.sign() <= 0) throw std::domain_error("log of an interval touching zero");
    Interval r(prec());
    mpfr_log(r.lo_.get(), lo_.get(), MPFR_RNDD);
    mpfr_log(r.hi_.get(), hi_.get(), MPFR_RNDU);
    return r;
}

Interval Interval::log_plus() const
{
    if (lo_.sign() < 0) throw std::domain_error("log_plus of a negative interval");
    Interval r(prec());
    if (mpfr_cmp_ui(lo_.get(), 1) > 0)
        mpfr_log(r.lo_.get(), lo_.get(), MPFR_RNDD);
    else
        mpfr_set_zero(r.lo_.get(), 1);
    if (mpfr_cmp_ui(hi_.get(), 1) > 0)
        mpfr_log(r.hi_.get(), hi_.get(), MPFR_RNDU);
    else
        mpfr_set_zero(r.hi_.get(), 1);
    return r;
}

Interval Interval::hull(const Interval& o) const
{
    Interval r = *this;
    if (o.lo_ < r.lo_) mpfr_set(r.lo_.get(), o.lo_.get(), MPFR_RNDD);
    if (o.hi_ > r.hi_) mpfr_set(r.hi_.get(), o.hi_.get(), MPFR_RNDU);
    return r;
}

Interval Interval::widen(const Real& rad) const
{
    Interval r(prec());
    mpfr_sub(r.lo_.get(), lo_.get(), rad.get(), MPFR_RNDD);
    mpfr_add(r.hi_.get(), hi_.get(), rad.get(), MPFR_RNDU);
    return r;
}

void Interval::mid_rad(Real& mid, Real& rad) const
{
    mid = Real(prec());
    rad = Real(prec());
    mpfr_add(mid.get(), lo_.get(), hi_.get(), MPFR_RNDN);
    mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
    Real a(prec()), b(prec());
    mpfr_sub(a.get(), mid.get(), lo_.get(), MPFR_RNDU);
    mpfr_sub(b.get(), hi_.get(), mid.get(), MPFR_RNDU);
    mpfr_max(rad.get(), a.get(), b.get(), MPFR_RNDU);
}

}  // namespace hcert::exact
