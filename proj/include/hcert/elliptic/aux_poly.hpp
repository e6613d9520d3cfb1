#pragma once

#include "hcert/elliptic/curve.hpp"
#include "hcert/elliptic/xmap.hpp"
#include "hcert/exact/bi_poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace hcert::elliptic {

using exact::BiPolynomial;

/// paper: m = p^2 (Frobenius^4 = [p^2] on a supersingular reduction).
/// compact: m = p (x o [p] = x o Frobenius^2).
enum class AuxMode { paper, compact };

std::string mode_name(AuxMode mode);
std::optional<AuxMode> parse_mode(std::string_view s);

/// Largest m^2 accepted by default; paper mode at p = 5 needs 625.
inline constexpr long kDefaultMaxXmapDegree = 1000;

struct AuxPolynomial {
    std::uint64_t p = 0;
    AuxMode mode = AuxMode::compact;
    int m = 0;
    /// Degree in X: m^2 + 2p.
    int n = 0;
    XMap x;
    /// X^(2p) a(X) - (X^2 - T^2) b(X).
    BiPolynomial f;
};

/// Builds f for a supersingular prime p >= 5 and checks, throwing
/// std::logic_error on failure: a = X^(m^2) and b = 1 mod p, the congruence
/// f = X^n - X^2 + T^2 mod p, and n odd, n >= 5, p | n. Throws
/// std::invalid_argument when p is not supersingular and
/// exact::ResourceError when m^2 exceeds max_xmap_degree.
AuxPolynomial build_aux_poly(const CurveQ& e, std::uint64_t p, AuxMode mode,
                             long max_xmap_degree = kDefaultMaxXmapDegree);

/// X^n - X^2 + T^s.
BiPolynomial tilde_polynomial(int n, int s);

}  // namespace hcert::elliptic
