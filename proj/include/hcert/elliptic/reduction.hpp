#pragma once

#include "hcert/elliptic/curve.hpp"

#include <cstdint>
#include <vector>

namespace hcert::elliptic {

struct ReductionInfo {
    std::uint64_t p = 0;
    bool good = false;
    /// p + 1 - #E(F_p); zero when the reduction is bad.
    long a_p = 0;
    bool supersingular = false;
};

/// Reduction data at a prime p >= 5, counting points with the quadratic
/// character sum over F_p. Throws std::invalid_argument("restricted to
/// p >= 5") for smaller p and for composite p.
ReductionInfo reduction_info(const CurveQ& e, std::uint64_t p);

/// Supersingular primes in [5, bound], ascending.
std::vector<std::uint64_t> find_supersingular_primes(const CurveQ& e, std::uint64_t bound);

}  // namespace hcert::elliptic
