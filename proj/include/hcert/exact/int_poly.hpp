#pragma once

// Dense univariate polynomials over the integers.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hcert::exact {

/// Exact polynomial in Z[X]; coefficient i multiplies X^i.
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and has degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial constant(const mpz_class& c);
    static IntPolynomial monomial(const mpz_class& c, std::size_t degree);
    static IntPolynomial x() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t size() const { return coeffs_.size(); }

    /// Zero for indices beyond the degree.
    const mpz_class& coeff(std::size_t i) const;
    const mpz_class& leading() const;
    std::span<const mpz_class> coeffs() const { return coeffs_; }

    mpz_class content() const;
    /// Divides by the content and makes the leading coefficient positive.
    IntPolynomial primitive_part() const;
    IntPolynomial derivative() const;
    IntPolynomial operator-() const;

    mpz_class evaluate(const mpz_class& x) const;
    /// Largest coefficient bit length (0 for the zero polynomial).
    std::size_t max_coeff_bits() const;

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial& operator*=(const mpz_class& c);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(IntPolynomial a, const mpz_class& c) { return a *= c; }
    friend IntPolynomial operator*(const mpz_class& c, IntPolynomial a) { return a *= c; }
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// X^k * p.
    IntPolynomial shift(std::size_t k) const;

private:
    void normalize();
    std::vector<mpz_class> coeffs_;
};

/// p(-X).
IntPolynomial negate_variable(const IntPolynomial& p);
/// X^deg p * p(1/X).
IntPolynomial reverse(const IntPolynomial& p);
/// p(X + c).
IntPolynomial taylor_shift(const IntPolynomial& p, const mpz_class& c);
/// p^k.
IntPolynomial power(const IntPolynomial& p, unsigned k);

/// lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Quotient and remainder when b divides a over Z in the Euclidean sense;
/// throws std::domain_error if a division step is not exact in Z.
std::pair<IntPolynomial, IntPolynomial> divide_integral(const IntPolynomial& a, const IntPolynomial& b);

/// a / b, throwing std::domain_error unless b divides a exactly in Z[X].
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd with positive leading coefficient (content included).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Squarefree part p / gcd(p, p'), primitive.
IntPolynomial squarefree_part(const IntPolynomial& p);

/// True when p has a repeated root over C, i.e. gcd(p, p') is not constant.
bool has_repeated_root(const IntPolynomial& p);

}  // namespace hcert::exact
