#pragma once

#include "hcert/heights/algebraic.hpp"
#include "hcert/heights/height_value.hpp"

namespace hcert::heights {

/// Absolute logarithmic Weil height h(a) = (log|lc| + sum log+ |a_i|) / d
/// over the roots a_i of the minimal polynomial, enclosed with roots
/// isolated to 2^-bits. Throws std::domain_error("height requires minimal
/// polynomial") unless irreducibility is certified.
HeightValue weil_height(const AlgebraicNumber& a, unsigned bits = 64);

/// log M(p) = log|lc| + sum log+ |a_i| for any nonzero p (roots counted
/// once per distinct root; pass squarefree input for the Mahler measure).
Interval log_mahler_measure(const IntPolynomial& p, unsigned bits = 64);

/// log 2 / (n - 1), for n >= 2.
HeightValue gm_small_point_bound(long n);

}  // namespace hcert::heights
