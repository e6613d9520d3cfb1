#pragma once

#include "hcert/exact/ball.hpp"
#include "hcert/exact/int_poly.hpp"
#include "hcert/galois/irreducible.hpp"

namespace hcert::heights {

using exact::ComplexBall;
using exact::IntPolynomial;

/// An algebraic number given by a defining polynomial and a ball that
/// isolates one of its roots. The polynomial is kept primitive with positive
/// leading coefficient; `irreducibility` records whether it is proven
/// minimal.
struct AlgebraicNumber {
    IntPolynomial min_poly;
    ComplexBall root;
    galois::IrreducibilityCertificate irreducibility;

    bool verified() const { return irreducibility.irreducible(); }
    int degree() const { return min_poly.degree(); }

    /// The root of p selected by `approx` (the unique isolating ball meeting
    /// it), with irreducibility certified under `prime_budget`.
    static AlgebraicNumber select(const IntPolynomial& p, const ComplexBall& approx, int prime_budget = 200);
    /// The i-th ball of isolate_roots(p) after sorting by (re, im).
    static AlgebraicNumber from_root_index(const IntPolynomial& p, std::size_t index, int prime_budget = 200);
    static AlgebraicNumber rational(const mpz_class& num, const mpz_class& den = 1);
};

/// Primitive polynomial with roots alpha_i^k, where alpha_i are the roots of
/// p counted with multiplicity; built from power sums by Newton's identities.
IntPolynomial power_polynomial(const IntPolynomial& p, unsigned k);

/// Isolating balls of p sorted by real then imaginary midpoint.
std::vector<ComplexBall> sorted_roots(const IntPolynomial& p, unsigned bits = 64);

/// alpha^k, 1/alpha, -alpha and alpha + c as certified algebraic numbers.
AlgebraicNumber power(const AlgebraicNumber& a, unsigned k);
AlgebraicNumber inverse(const AlgebraicNumber& a);
AlgebraicNumber negate(const AlgebraicNumber& a);
AlgebraicNumber shift(const AlgebraicNumber& a, long c);

}  // namespace hcert::heights
