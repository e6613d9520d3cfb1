#include "hcert/galois/small_point.hpp"

#include "hcert/galois/osada.hpp"
#include "hcert/heights/weil.hpp"

#include <stdexcept>

namespace hcert::galois {

bool GmSmallPoint::ok() const
{
    return certificate.verdict == GaloisCertificate::Verdict::is_Sn && positive && within_bound;
}

GmSmallPoint gm_small_point(long n, const GaloisOptions& opts, unsigned bits)
{
    if (n < 5) throw std::invalid_argument("small point construction needs n >= 5");
    GmSmallPoint r;
    r.n = n;
    const auto f = osada_polynomial(n);
    r.certificate = sn_an_certify(f, opts);

    const auto roots = heights::sorted_roots(f, bits);
    const exact::ComplexBall* chosen = nullptr;
    for (const auto& b : roots)
        if (b.im().is_zero() && b.re() > exact::Real::from(1L)) chosen = &b;
    if (!chosen) throw std::logic_error("no real root above 1");
    r.alpha.min_poly = f;
    r.alpha.root = *chosen;
    r.alpha.irreducibility = r.certificate.irreducibility;

    r.bound = heights::gm_small_point_bound(n);
    if (r.alpha.verified()) {
        r.h = heights::weil_height(r.alpha, bits);
        r.positive = r.h.certainly_positive();
        r.within_bound = r.h.upper() <= r.bound.lower();
    }
    return r;
}

}  // namespace hcert::galois
