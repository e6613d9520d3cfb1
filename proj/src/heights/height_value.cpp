#include "hcert/heights/height_value.hpp"

#include <stdexcept>

namespace hcert::heights {

HeightValue::HeightValue(Real mid, Real err) : mid_(std::move(mid)), err_(std::move(err))
{
    if (err_.sign() < 0) throw std::invalid_argument("negative height radius");
}

HeightValue HeightValue::from_interval(const Interval& iv, bool nonnegative)
{
    Interval use = iv;
    if (nonnegative && iv.lo().sign() < 0) {
        Real zero(iv.prec());
        Real hi = iv.hi();
        if (hi.sign() < 0) mpfr_set_zero(hi.get(), 1);
        use = Interval(zero, hi);
    }
    Real mid, rad;
    use.mid_rad(mid, rad);
    return HeightValue(std::move(mid), std::move(rad));
}

HeightValue HeightValue::exact_zero(mpfr_prec_t prec) { return HeightValue(Real(prec), Real(prec)); }

Interval HeightValue::interval() const { return Interval(lower(), upper()); }

Real HeightValue::lower() const
{
    Real r(mid_.prec());
    mpfr_sub(r.get(), mid_.get(), err_.get(), MPFR_RNDD);
    return r;
}

Real HeightValue::upper() const
{
    Real r(mid_.prec());
    mpfr_add(r.get(), mid_.get(), err_.get(), MPFR_RNDU);
    return r;
}

double HeightValue::err_double() const { return mpfr_get_d(err_.get(), MPFR_RNDU); }

HeightValue HeightValue::operator+(const HeightValue& o) const
{
    return from_interval(interval() + o.interval(), false);
}

HeightValue HeightValue::operator-(const HeightValue& o) const
{
    return from_interval(interval() - o.interval(), false);
}

HeightValue HeightValue::scale(long num, long den) const
{
    if (den <= 0) throw std::invalid_argument("scale denominator must be positive");
    Interval iv = interval().mul_si(num).div_si(den);
    return from_interval(iv, false);
}

std::string HeightValue::mid_string(int digits) const { return mid_.to_string(digits, MPFR_RNDN); }

std::string HeightValue::err_string(int digits) const
{
    const std::string shown = mid_string(digits);
    Real printed = shown == "0" ? Real(mid_.prec()) : Real::from_string(shown, mid_.prec(), MPFR_RNDN);
    Real slack(mid_.prec());
    mpfr_sub(slack.get(), printed.get(), mid_.get(), MPFR_RNDU);
    mpfr_abs(slack.get(), slack.get(), MPFR_RNDU);
    // One extra ulp covers rounding inside the string conversion of mid.
    if (!mid_.is_zero()) {
        Real ulp(mid_.prec());
        mpfr_set_ui_2exp(ulp.get(), 1, mpfr_get_exp(mid_.get()) - mid_.prec() + 1, MPFR_RNDU);
        mpfr_add(slack.get(), slack.get(), ulp.get(), MPFR_RNDU);
    }
    Real total(mid_.prec());
    mpfr_add(total.get(), err_.get(), slack.get(), MPFR_RNDU);
    return total.to_string(digits, MPFR_RNDU);
}

std::string HeightValue::to_json(int digits) const
{
    return "{\"err\": \"" + err_string(digits) + "\", \"mid\": \"" + mid_string(digits) + "\"}";
}

}  // namespace hcert::heights
