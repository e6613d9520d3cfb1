#pragma once

#include <cstdint>
#include <string>

namespace hcert::elliptic {

/// Outcome of a search for t0 in F_(p^k)^* making X^n - X^2 + t0^s
/// irreducible over F_(p^k). A monic factorization over F_(p^k)(T) would
/// specialize to one at t0, so a witness proves irreducibility of
/// X^n - X^2 + T^s over F_p(T).
struct TildeWitness {
    int n = 0, s = 0;
    std::uint64_t p = 0;
    bool found = false;
    /// k of the field F_(p^k) where the witness lives.
    unsigned field_degree = 0;
    /// Field code of t0 (base-p digits of its coefficient vector).
    std::uint64_t t0 = 0;
    /// Candidates t0^s tested, over all fields scanned.
    std::uint64_t tested = 0;

    std::string describe() const;
};

/// Requires n >= 5 odd, p | n, s even, p >= 3 prime (std::invalid_argument
/// otherwise). Scans k = 1, ..., max_field_deg while p^k < 2^22.
TildeWitness tilde_irreducibility_witness(int n, int s, std::uint64_t p, unsigned max_field_deg = 2);

}  // namespace hcert::elliptic
