#pragma once

#include "hcert/exact/int_poly.hpp"

#include <gmpxx.h>

namespace hcert::exact {

/// Res(p, q) by the subresultant algorithm. Throws std::domain_error
/// ("zero polynomial") if either input is zero.
mpz_class resultant(const IntPolynomial& p, const IntPolynomial& q);

/// (-1)^(d(d-1)/2) Res(p, p') / lc(p). Requires deg p >= 1.
mpz_class discriminant(const IntPolynomial& p);

/// Exact square test for integers; negative values are never squares.
bool is_perfect_square(const mpz_class& n);

}  // namespace hcert::exact
