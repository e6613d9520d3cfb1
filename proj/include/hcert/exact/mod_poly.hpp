#pragma once

#include "hcert/exact/finite_field.hpp"
#include "hcert/exact/int_poly.hpp"

#include <cstdint>
#include <vector>

namespace hcert::exact {

/// Polynomial with coefficients in Z/NZ. Ring operations work for any
/// modulus N >= 2; division, gcd and factorization require N prime.
class ModPolynomial {
public:
    ModPolynomial(u64 modulus, std::vector<u64> coeffs);
    static ModPolynomial reduce(const IntPolynomial& p, u64 modulus);

    u64 modulus() const { return modulus_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<u64>& coeffs() const { return coeffs_; }
    u64 coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    bool modulus_is_prime() const { return prime_; }

    friend ModPolynomial operator+(const ModPolynomial& a, const ModPolynomial& b);
    friend ModPolynomial operator-(const ModPolynomial& a, const ModPolynomial& b);
    friend ModPolynomial operator*(const ModPolynomial& a, const ModPolynomial& b);
    friend bool operator==(const ModPolynomial& a, const ModPolynomial& b)
    {
        return a.modulus_ == b.modulus_ && a.coeffs_ == b.coeffs_;
    }

    ModPolynomial derivative() const;
    ModPolynomial monic() const;
    ModPolynomial operator%(const ModPolynomial& m) const;
    friend ModPolynomial gcd(const ModPolynomial& a, const ModPolynomial& b);

    bool is_squarefree() const;
    bool is_irreducible() const;

private:
    void require_prime(const char* what) const;
    u64 modulus_;
    bool prime_;
    std::vector<u64> coeffs_;
};

/// Multiset of irreducible factor degrees (ascending) of a squarefree
/// polynomial over a prime field. Throws std::domain_error("ramified prime")
/// when the input has a repeated factor, std::invalid_argument for a
/// composite modulus.
std::vector<int> factor_degrees_mod_p(const ModPolynomial& p);

}  // namespace hcert::exact
