#pragma once

// JSON-compatible text forms. Univariate: "[c0, c1, ..., cd]" in ascending
// degree, each coefficient a bare or quoted decimal integer. Bivariate: a
// list of "[i, j, c]" triples (T-exponent, X-exponent, coefficient).

#include "hcert/exact/bi_poly.hpp"
#include "hcert/exact/int_poly.hpp"

#include <string>
#include <string_view>

namespace hcert::exact {

/// Throws std::invalid_argument on malformed input.
IntPolynomial parse_int_poly(std::string_view text);
BiPolynomial parse_bi_poly(std::string_view text);

/// Coefficients as quoted decimal strings, e.g. ["-1","-1","0","1"].
std::string format_int_poly(const IntPolynomial& p);
/// Triples with the coefficient as a decimal string, e.g. [[0,2,"1"]].
std::string format_bi_poly(const BiPolynomial& p);

}  // namespace hcert::exact
