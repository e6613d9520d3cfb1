#pragma once

#include "hcert/elliptic/curve.hpp"
#include "hcert/exact/int_poly.hpp"

#include <vector>

namespace hcert::elliptic {

using exact::IntPolynomial;

/// Division polynomials with y^2 eliminated: f_m = psi_m for odd m and
/// f_m = psi_m / (2y) for even m, indices 0..count-1.
std::vector<IntPolynomial> division_polynomials(const CurveQ& e, int count);

/// x([m]P) = a(x) / b(x) for odd m.
struct XMap {
    int m = 0;
    IntPolynomial a, b;
};

/// a = x f_m^2 - 4(x^3 + a4 x + a6) f_(m-1) f_(m+1), b = f_m^2. Verifies that
/// a is monic of degree m^2, b has degree m^2 - 1 with leading coefficient
/// m^2, and gcd(a, b) = 1 before returning. Throws for even m or m < 3.
XMap xmap(const CurveQ& e, int m);

}  // namespace hcert::elliptic
