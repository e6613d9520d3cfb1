#include "hcert/heights/weil.hpp"

#include "hcert/exact/roots.hpp"

#include <stdexcept>

namespace hcert::heights {

using namespace exact;

namespace {

constexpr mpfr_prec_t kSumPrec = 128;

}  // namespace

Interval log_mahler_measure(const IntPolynomial& p, unsigned bits)
{
    if (p.is_zero()) throw std::domain_error("zero polynomial");
    Interval acc = Interval::log_abs(p.leading(), kSumPrec);
    if (p.degree() < 1) return acc;
    for (const auto& r : isolate_roots(p, bits)) acc = acc + r.abs().log_plus();
    return acc;
}

HeightValue weil_height(const AlgebraicNumber& a, unsigned bits)
{
    if (!a.verified()) throw std::domain_error("height requires minimal polynomial");
    const int d = a.degree();
    if (d < 1) throw std::domain_error("height requires minimal polynomial");
    return HeightValue::from_interval(log_mahler_measure(a.min_poly, bits).div_si(d));
}

HeightValue gm_small_point_bound(long n)
{
    if (n < 2) throw std::domain_error("bound needs n >= 2");
    return HeightValue::from_interval(Interval::log2_const(kSumPrec).div_si(n - 1));
}

}  // namespace hcert::heights
