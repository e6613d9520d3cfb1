#pragma once

#include "hcert/exact/real.hpp"

#include <string>

namespace hcert::heights {

using exact::Interval;
using exact::Real;

/// Certified height: the exact value lies in [mid - err, mid + err].
/// All heights are natural-log valued.
class HeightValue {
public:
    HeightValue() : mid_(128), err_(128) {}
    HeightValue(Real mid, Real err);
    /// Midpoint and covering radius of an interval; a negative lower end is
    /// clipped to zero since heights are nonnegative.
    static HeightValue from_interval(const Interval& iv, bool nonnegative = true);
    static HeightValue exact_zero(mpfr_prec_t prec = 128);

    const Real& mid() const { return mid_; }
    const Real& err() const { return err_; }
    Interval interval() const;
    Real lower() const;
    Real upper() const;
    double mid_double() const { return mid_.to_double(); }
    double err_double() const;

    /// True when the enclosure excludes zero from below, i.e. mid - err > 0.
    bool certainly_positive() const { return lower().sign() > 0; }
    bool certainly_le(const HeightValue& o) const { return upper() <= o.lower(); }
    bool contains_zero() const { return lower().sign() <= 0; }

    HeightValue operator+(const HeightValue& o) const;
    HeightValue operator-(const HeightValue& o) const;
    HeightValue scale(long num, long den = 1) const;

    /// Decimal strings; err is rounded up and absorbs the rounding of mid.
    std::string mid_string(int digits = 20) const;
    std::string err_string(int digits = 20) const;
    /// {"err": "...", "mid": "..."}
    std::string to_json(int digits = 20) const;

private:
    Real mid_, err_;
};

}  // namespace hcert::heights
