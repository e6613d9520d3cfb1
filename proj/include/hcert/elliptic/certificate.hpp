#pragma once

#include "hcert/elliptic/aux_poly.hpp"
#include "hcert/galois/sn_an.hpp"
#include "hcert/heights/algebraic.hpp"
#include "hcert/heights/height_value.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hcert::elliptic {

struct CertificateVerdict {
    enum class Status { pass, fail, suppressed };
    std::string name;
    Status status = Status::suppressed;
    std::string detail;

    std::string status_name() const;
};

inline constexpr const char* kStatusCertified = "certified";
inline constexpr const char* kStatusUnverified = "specialization excluded or unverified";

/// A point Q = (alpha', beta') of small height on E over Q(alpha), where
/// alpha is a root of g = f(zeta, X) and alpha' = (alpha^2 - zeta^2) / alpha^(2p).
/// beta' is a square root of alpha'^3 + a4 alpha' + a6 and is not computed.
struct SmallPointCertificate {
    explicit SmallPointCertificate(CurveQ e) : curve(std::move(e)) {}

    CurveQ curve;
    std::uint64_t p = 0;
    AuxMode mode = AuxMode::compact;
    int m = 0;
    int n = 0;
    BiPolynomial f;
    int zeta = 1;
    IntPolynomial g;
    galois::GaloisCertificate galois;
    heights::AlgebraicNumber alpha;
    /// h(alpha); left at zero when irreducibility of g is not certified.
    heights::HeightValue h_alpha;
    /// |h_hat - h o x| <= c on E.
    heights::HeightValue c;
    /// (4cp + log 2) / (m^2 - 4p), the bound on h_hat(Q).
    heights::HeightValue nt_bound;
    /// nt_bound + c, the bound on h(alpha).
    heights::HeightValue bound;
    /// X^(2p) a - (X^2 - zeta^2) b == g, checked exactly.
    bool identity_holds = false;
    std::string status = kStatusUnverified;
    std::vector<CertificateVerdict> verdicts;

    bool irreducible() const { return galois.irreducibility.irreducible(); }
    /// Identity holds and no verdict failed.
    bool ok() const;
};

struct CertificateOptions {
    galois::GaloisOptions galois;
    /// Root balls are isolated to 2^-bits.
    unsigned bits = 64;
    long max_xmap_degree = kDefaultMaxXmapDegree;
};

/// Requires p supersingular, zeta = +1 or -1 and m^2 > 4p. Irreducibility
/// of g is certified, never assumed; when it fails or is inconclusive the
/// height verdicts are suppressed and status is kStatusUnverified.
SmallPointCertificate small_point_certificate(const CurveQ& e, std::uint64_t p, AuxMode mode, int zeta,
                                              const CertificateOptions& opts = {});

}  // namespace hcert::elliptic
