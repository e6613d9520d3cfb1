#pragma once

#include "hcert/exact/finite_field.hpp"
#include "hcert/exact/int_poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hcert::galois {

using exact::IntPolynomial;
using exact::u64;

/// A sampled Frobenius cycle type: factor degrees of p mod `prime`.
struct CycleSample {
    u64 prime = 0;
    std::vector<int> degrees;
};

/// Outcome of an irreducibility attempt over Q. Certified kinds are proofs;
/// `reducible` is also a proof (a factor or a repeated root was exhibited);
/// `inconclusive` means the budget ran out.
struct IrreducibilityCertificate {
    enum class Kind { linear, by_prime, by_degree_sieve, by_root_subsets, reducible, inconclusive };

    Kind kind = Kind::inconclusive;
    /// The prime at which p is irreducible (by_prime).
    u64 prime = 0;
    /// Every good prime examined, in order, with its factor degrees.
    std::vector<CycleSample> samples;
    /// Why p is reducible: "root at zero", "repeated factor", "rational root",
    /// "factor from root subset".
    std::string reducible_reason;
    /// A proper factor when one was exhibited.
    IntPolynomial factor;

    bool irreducible() const
    {
        return kind == Kind::linear || kind == Kind::by_prime || kind == Kind::by_degree_sieve ||
               kind == Kind::by_root_subsets;
    }
    std::string kind_name() const;
};

/// Largest degree for which the numerical root-subset search runs.
inline constexpr int kRootSubsetMaxDegree = 12;

/// Sound, incomplete irreducibility test for a primitive p of degree >= 1.
/// Cheap reducibility witnesses run first. Then ascending primes not
/// dividing lc(p) at which p stays squarefree are scanned: irreducibility
/// mod one prime certifies; otherwise the achievable factor-degree subset
/// sums are intersected and {0, n} certifies. Small degrees fall back to an
/// exhaustive search over root subsets in ball arithmetic.
IrreducibilityCertificate certify_irreducible(const IntPolynomial& p, int prime_budget = 200);

/// Rational roots r/s of p with |numerator|, |denominator| bounded by the
/// divisor enumeration limit; empty when the constant or leading
/// coefficient is too large to enumerate divisors.
std::vector<std::pair<mpz_class, mpz_class>> small_rational_roots(const IntPolynomial& p);

/// Subset sums of a degree multiset, as a 0/1 vector indexed 0..sum.
std::vector<char> degree_subset_sums(const std::vector<int>& degrees);

}  // namespace hcert::galois
