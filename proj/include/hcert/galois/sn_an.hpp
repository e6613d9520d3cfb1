#pragma once

#include "hcert/galois/irreducible.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hcert::galois {

struct GaloisOptions {
    /// Good primes examined in total (irreducibility plus group sampling).
    int prime_budget = 200;
    /// Above this degree the discriminant is not formed exactly; squareness
    /// is then decided only by an odd Frobenius cycle type, if one shows up.
    int exact_disc_max_degree = 160;
};

/// Evidence-based statement about Gal(p/Q) inside S_n.
struct GaloisCertificate {
    enum class Verdict { contains_An, is_Sn, is_An, inconclusive };

    IntPolynomial poly;
    IrreducibilityCertificate irreducibility;
    /// Every good prime sampled, ascending, with its Frobenius cycle type.
    std::vector<CycleSample> group_evidence;
    Verdict verdict = Verdict::inconclusive;
    /// Unset when squareness of the discriminant could not be decided.
    std::optional<bool> disc_square;
    /// "exact", "odd Frobenius at <q>" or "undetermined".
    std::string disc_method = "undetermined";
    /// Why the group is primitive, e.g. "prime degree".
    std::string primitivity;
    /// Why the group contains A_n, e.g. "7-cycle at 13".
    std::string alternating;

    std::string verdict_name() const;
};

/// Facts extracted from one cycle type of a permutation of n points.
struct CycleTypeFacts {
    bool odd = false;
    /// A power of the permutation is a single transposition / 3-cycle.
    bool transposition = false;
    bool three_cycle = false;
    /// Primes l such that a power of the permutation is a single l-cycle.
    std::vector<int> prime_cycles;
    /// Cycle type {1, n-1}.
    bool long_cycle_with_fixed_point = false;
};

CycleTypeFacts analyze_cycle_type(int n, const std::vector<int>& degrees);

/// Certifies irreducibility, then samples Frobenius cycle types at good
/// primes in ascending order. Primitivity comes from prime degree, an
/// (n-1)-cycle, or a prime l-cycle with l > n/2; a primitive group with a
/// transposition, a 3-cycle or a prime l-cycle with l <= n-3 contains A_n
/// (Jordan). S_n versus A_n is decided by squareness of the discriminant.
GaloisCertificate sn_an_certify(const IntPolynomial& p, const GaloisOptions& opts = {});

}  // namespace hcert::galois
