#pragma once

#include "hcert/elliptic/curve.hpp"
#include "hcert/heights/height_value.hpp"

#include <optional>
#include <string>

namespace hcert::heights {

using elliptic::CurveQ;
using elliptic::RationalPoint;

/// Certified bound C_E on |h(x([2]R)) - 4 h(x(R))| together with the data it
/// was derived from. With F, G the duplication polynomials:
///  - upper side: max(L1(F), L1(G)) bounds max(|F|, |G|) / max(|X|,|Z|)^4;
///  - lower side: integer cubics with f F + g G = D X^7 and f' F + g' G = D Z^7
///    give max(|F|,|G|)/gcd >= max(|X|,|Z|)^4 / max(L1(f)+L1(g), L1(f')+L1(g')).
struct CompareConstant {
    HeightValue c_e;
    /// c = C_E / 3 bounds |h_hat(P) - h(x(P))|.
    HeightValue c;
    mpz_class upper_l1;
    mpz_class lower_l1;
    mpz_class elimination_d;
    std::string model;
};

CompareConstant height_compare_constant(const CurveQ& e);

struct NTConfig {
    /// Starting number of doublings k; the tail is bounded by 4^-k C_E / 3.
    unsigned doubling_steps = 8;
    /// Raise k (up to max_steps) until err <= tolerance; 0 disables.
    double tolerance = 0;
    unsigned max_steps = 12;
    /// Reused when provided, computed otherwise.
    std::optional<HeightValue> c_e;
};

/// Height of a rational number x = X/Z in lowest terms: log max(|X|, |Z|).
Interval log_height(const mpq_class& x, mpfr_prec_t prec = 128);

/// h_hat(P) = lim 4^-k h(x([2^k]P)). Exactly zero when some [2^j]P = O.
/// Throws std::domain_error for points off the curve or P = O.
HeightValue neron_tate_height(const CurveQ& e, const RationalPoint& p, const NTConfig& cfg = {});

}  // namespace hcert::heights
