#pragma once

#include "hcert/exact/int_poly.hpp"

#include <gmpxx.h>

#include <map>
#include <utility>

namespace hcert::exact {

/// Sparse polynomial in Z[T, X]. Keys are (T-exponent, X-exponent); zero
/// coefficients are never stored.
class BiPolynomial {
public:
    using Key = std::pair<unsigned, unsigned>;

    BiPolynomial() = default;
    /// Embeds p(X) with T-degree 0.
    static BiPolynomial from_x(const IntPolynomial& p);
    static BiPolynomial monomial(const mpz_class& c, unsigned t_exp, unsigned x_exp);

    const std::map<Key, mpz_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// -1 for the zero polynomial.
    int degree_x() const;
    int degree_t() const;
    mpz_class coeff(unsigned t_exp, unsigned x_exp) const;

    BiPolynomial& operator+=(const BiPolynomial& o);
    BiPolynomial& operator-=(const BiPolynomial& o);
    friend BiPolynomial operator+(BiPolynomial a, const BiPolynomial& b) { return a += b; }
    friend BiPolynomial operator-(BiPolynomial a, const BiPolynomial& b) { return a -= b; }
    friend BiPolynomial operator*(const BiPolynomial& a, const BiPolynomial& b);
    friend bool operator==(const BiPolynomial& a, const BiPolynomial& b) { return a.terms_ == b.terms_; }

    /// f(t0, X).
    IntPolynomial specialize_t(const mpz_class& t0) const;
    /// Coefficient of X^j as a polynomial in T.
    IntPolynomial x_coefficient(unsigned j) const;
    /// All coefficients reduced into [0, m).
    BiPolynomial reduce_mod(const mpz_class& m) const;
    /// True when every coefficient of a - b is divisible by m.
    friend bool congruent_mod(const BiPolynomial& a, const BiPolynomial& b, const mpz_class& m);

private:
    void add_term(const Key& k, const mpz_class& c);
    std::map<Key, mpz_class> terms_;
};

}  // namespace hcert::exact
