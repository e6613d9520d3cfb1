#pragma once

#include "hcert/galois/sn_an.hpp"
#include "hcert/heights/algebraic.hpp"
#include "hcert/heights/height_value.hpp"

namespace hcert::galois {

/// A root alpha of X^n - X - 1 with its Galois certificate, certified
/// height and the bound log 2 / (n - 1) that n h(alpha) = h(alpha + 1)
/// <= log 2 + h(alpha) forces.
struct GmSmallPoint {
    long n = 0;
    GaloisCertificate certificate;
    heights::AlgebraicNumber alpha;
    heights::HeightValue h;
    heights::HeightValue bound;
    /// h(alpha) > 0 certified (Kronecker: alpha is not a root of unity).
    bool positive = false;
    /// Upper end of h(alpha) below the lower end of the bound.
    bool within_bound = false;
    /// True when the verdict is is_Sn and both assertions hold.
    bool ok() const;
};

/// n >= 5; alpha is the real root in (1, 2).
GmSmallPoint gm_small_point(long n, const GaloisOptions& opts = {}, unsigned bits = 64);

}  // namespace hcert::galois
