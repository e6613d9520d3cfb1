#include "hcert/elliptic/certificate.hpp"

#include "hcert/exact/roots.hpp"
#include "hcert/heights/neron_tate.hpp"
#include "hcert/heights/weil.hpp"

#include <stdexcept>

namespace hcert::elliptic {

using exact::ComplexBall;
using exact::Interval;
using heights::HeightValue;

std::string CertificateVerdict::status_name() const
{
    switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::suppressed: return "suppressed";
    }
    return "suppressed";
}

bool SmallPointCertificate::ok() const
{
    if (!identity_holds) return false;
    for (const auto& v : verdicts)
        if (v.status == CertificateVerdict::Status::fail) return false;
    return true;
}

namespace {

CertificateVerdict verdict(std::string name, bool holds, std::string detail)
{
    CertificateVerdict v;
    v.name = std::move(name);
    v.status = holds ? CertificateVerdict::Status::pass : CertificateVerdict::Status::fail;
    v.detail = std::move(detail);
    return v;
}

CertificateVerdict suppressed(std::string name)
{
    CertificateVerdict v;
    v.name = std::move(name);
    v.detail = "irreducibility of g not certified";
    return v;
}

}  // namespace

SmallPointCertificate small_point_certificate(const CurveQ& e, std::uint64_t p, AuxMode mode, int zeta,
                                              const CertificateOptions& opts)
{
    if (zeta != 1 && zeta != -1) throw std::invalid_argument("zeta must be 1 or -1");
    AuxPolynomial aux = build_aux_poly(e, p, mode, opts.max_xmap_degree);
    const long m2 = static_cast<long>(aux.m) * aux.m;
    const long four_p = 4 * static_cast<long>(p);
    if (m2 <= four_p) throw std::invalid_argument("m^2 must exceed 4p");

    SmallPointCertificate cert(e);
    cert.p = p;
    cert.mode = mode;
    cert.m = aux.m;
    cert.n = aux.n;
    cert.zeta = zeta;
    cert.f = aux.f;
    cert.g = aux.f.specialize_t(zeta);

    // zeta^2 = 1.
    const IntPolynomial x2z = IntPolynomial::monomial(1, 2) - IntPolynomial::constant(1);
    const IntPolynomial lhs = IntPolynomial::monomial(1, 2 * p) * aux.x.a - x2z * aux.x.b;
    cert.identity_holds = lhs == cert.g && cert.g.degree() == aux.n && cert.g.leading() == 1;

    cert.galois = galois::sn_an_certify(cert.g, opts.galois);

    const auto cc = heights::height_compare_constant(e);
    cert.c = cc.c;
    const Interval ci = cert.c.interval();
    const Interval nt = (ci.mul_si(four_p) + Interval::log2_const()).div_si(m2 - four_p);
    cert.nt_bound = HeightValue::from_interval(nt);
    cert.bound = HeightValue::from_interval(nt + ci);

    exact::RootIsolationOptions ro;
    ro.precision_bits = opts.bits;
    const std::vector<ComplexBall> roots = exact::isolate_roots(cert.g, ro);
    if (static_cast<int>(roots.size()) != cert.n) throw std::logic_error("g is not squarefree");

    if (cert.irreducible()) {
        if (aux.x.b.degree() >= cert.n) throw std::logic_error("b(alpha) may vanish");
        cert.status = kStatusCertified;
        cert.alpha = heights::AlgebraicNumber{cert.g, roots.front(), cert.galois.irreducibility};
        cert.h_alpha = heights::weil_height(cert.alpha, opts.bits);
        cert.verdicts.push_back(verdict("height_bound", cert.h_alpha.upper() <= cert.bound.lower(),
                                        "h(alpha) <= (4cp + log 2)/(m^2 - 4p) + c"));
        cert.verdicts.push_back(verdict("height_positive", cert.h_alpha.certainly_positive(),
                                        "h(alpha) > 0, so alpha is not a root of unity"));
    } else {
        cert.alpha = heights::AlgebraicNumber{cert.g, roots.front(), cert.galois.irreducibility};
        cert.verdicts.push_back(suppressed("height_bound"));
        cert.verdicts.push_back(suppressed("height_positive"));
    }

    // At every root: alpha^(2p) alpha' = alpha^2 - zeta^2 and a(alpha) = alpha' b(alpha).
    bool relation = true, residual = true;
    const ComplexBall one = ComplexBall::exact(1L, roots.front().prec());
    for (const auto& r : roots) {
        residual = residual && exact::evaluate(cert.g, r).contains_zero();
        const ComplexBall alpha_prime = (r * r - one) / r.pow(2 * p);
        const ComplexBall d = exact::evaluate(aux.x.a, r) - alpha_prime * exact::evaluate(aux.x.b, r);
        relation = relation && d.contains_zero();
    }
    cert.verdicts.push_back(verdict("root_relation", relation,
                                    "a(alpha) - alpha' b(alpha) encloses 0 at all " + std::to_string(roots.size()) +
                                        " roots"));
    cert.verdicts.push_back(verdict("root_residual", residual, "g(alpha) encloses 0 at every root ball"));
    return cert;
}

}  // namespace hcert::elliptic
