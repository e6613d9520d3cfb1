#pragma once

#include "hcert/exact/ball.hpp"
#include "hcert/exact/int_poly.hpp"

#include <stdexcept>
#include <vector>

namespace hcert::exact {

/// Raised when certification would need more working precision than allowed.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RootIsolationOptions {
    /// Target: every radius at most 2^-precision_bits.
    unsigned precision_bits = 64;
    /// Hard ceiling on the working precision before giving up.
    mpfr_prec_t max_working_prec = 1 << 16;
};

/// Certified isolation of the complex roots of p. Repeated roots are first
/// removed by exact gcd deflation, so the result has one ball per distinct
/// root: pairwise disjoint balls, each containing exactly one root.
/// Real roots are returned with a real midpoint whenever that certifies.
/// Throws std::domain_error on the zero polynomial and ResourceError when
/// max_working_prec is exhausted.
std::vector<ComplexBall> isolate_roots(const IntPolynomial& p, const RootIsolationOptions& opts = {});

inline std::vector<ComplexBall> isolate_roots(const IntPolynomial& p, unsigned precision_bits)
{
    RootIsolationOptions o;
    o.precision_bits = precision_bits;
    return isolate_roots(p, o);
}

/// Re-certifies previously isolated roots of a squarefree p at a tighter
/// radius target, starting from their midpoints.
std::vector<ComplexBall> refine_roots(const IntPolynomial& p, const std::vector<ComplexBall>& roots,
                                      const RootIsolationOptions& opts);

/// Number of balls whose midpoint is real, i.e. certified real roots.
std::size_t count_real(const std::vector<ComplexBall>& roots);

}  // namespace hcert::exact
