#include "hcert/exact/mod_poly.hpp"

#include <stdexcept>

namespace hcert::exact {

ModPolynomial::ModPolynomial(u64 modulus, std::vector<u64> coeffs)
    : modulus_(modulus), prime_(is_prime(modulus)), coeffs_(std::move(coeffs))
{
    if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
    for (auto& c : coeffs_) c %= modulus_;
    fpoly::trim(coeffs_);
}

ModPolynomial ModPolynomial::reduce(const IntPolynomial& p, u64 modulus)
{
    std::vector<u64> v(p.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = mpz_fdiv_ui(p.coeff(i).get_mpz_t(), modulus);
    return ModPolynomial(modulus, std::move(v));
}

void ModPolynomial::require_prime(const char* what) const
{
    if (!prime_) throw std::invalid_argument(std::string(what) + " requires a prime modulus");
}

static void check_same(const ModPolynomial& a, const ModPolynomial& b)
{
    if (a.modulus() != b.modulus()) throw std::invalid_argument("mixed moduli");
}

ModPolynomial operator+(const ModPolynomial& a, const ModPolynomial& b)
{
    check_same(a, b);
    std::vector<u64> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = static_cast<u64>((static_cast<u128>(a.coeff(i)) + b.coeff(i)) % a.modulus_);
    return ModPolynomial(a.modulus_, std::move(v));
}

ModPolynomial operator-(const ModPolynomial& a, const ModPolynomial& b)
{
    check_same(a, b);
    std::vector<u64> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = static_cast<u64>((static_cast<u128>(a.coeff(i)) + a.modulus_ - b.coeff(i)) % a.modulus_);
    return ModPolynomial(a.modulus_, std::move(v));
}

ModPolynomial operator*(const ModPolynomial& a, const ModPolynomial& b)
{
    check_same(a, b);
    if (a.is_zero() || b.is_zero()) return ModPolynomial(a.modulus_, {});
    std::vector<u64> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] = static_cast<u64>((static_cast<u128>(a.coeffs_[i]) * b.coeffs_[j] + v[i + j]) % a.modulus_);
    return ModPolynomial(a.modulus_, std::move(v));
}

ModPolynomial ModPolynomial::derivative() const
{
    std::vector<u64> v;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        v.push_back(static_cast<u64>(static_cast<u128>(coeffs_[i]) * (i % modulus_) % modulus_));
    return ModPolynomial(modulus_, std::move(v));
}

ModPolynomial ModPolynomial::monic() const
{
    require_prime("monic");
    return ModPolynomial(modulus_, fpoly::make_monic(PrimeField(modulus_), coeffs_));
}

ModPolynomial ModPolynomial::operator%(const ModPolynomial& m) const
{
    check_same(*this, m);
    require_prime("polynomial division");
    if (m.is_zero()) throw std::domain_error("zero polynomial");
    return ModPolynomial(modulus_, fpoly::divrem(PrimeField(modulus_), coeffs_, m.coeffs_));
}

ModPolynomial gcd(const ModPolynomial& a, const ModPolynomial& b)
{
    check_same(a, b);
    a.require_prime("gcd");
    return ModPolynomial(a.modulus_, fpoly::gcd(PrimeField(a.modulus_), a.coeffs_, b.coeffs_));
}

bool ModPolynomial::is_squarefree() const
{
    require_prime("squarefree test");
    return fpoly::is_squarefree(PrimeField(modulus_), coeffs_);
}

bool ModPolynomial::is_irreducible() const
{
    require_prime("irreducibility test");
    return fpoly::is_irreducible(PrimeField(modulus_), coeffs_);
}

std::vector<int> factor_degrees_mod_p(const ModPolynomial& p)
{
    if (!p.modulus_is_prime()) throw std::invalid_argument("factor degrees require a prime modulus");
    if (p.is_zero()) throw std::domain_error("zero polynomial");
    if (!p.is_squarefree()) throw std::domain_error("ramified prime");
    return fpoly::distinct_degree_factorization(PrimeField(p.modulus()), p.coeffs());
}

}  // namespace hcert::exact
