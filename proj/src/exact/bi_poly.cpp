#include "hcert/exact/bi_poly.hpp"

#include <algorithm>

namespace hcert::exact {

BiPolynomial BiPolynomial::from_x(const IntPolynomial& p)
{
    BiPolynomial r;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p.coeff(i) != 0) r.terms_.emplace(Key{0u, static_cast<unsigned>(i)}, p.coeff(i));
    return r;
}

BiPolynomial BiPolynomial::monomial(const mpz_class& c, unsigned t_exp, unsigned x_exp)
{
    BiPolynomial r;
    if (c != 0) r.terms_.emplace(Key{t_exp, x_exp}, c);
    return r;
}

int BiPolynomial::degree_x() const
{
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, static_cast<int>(k.second));
    return d;
}

int BiPolynomial::degree_t() const
{
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, static_cast<int>(k.first));
    return d;
}

mpz_class BiPolynomial::coeff(unsigned t_exp, unsigned x_exp) const
{
    auto it = terms_.find(Key{t_exp, x_exp});
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void BiPolynomial::add_term(const Key& k, const mpz_class& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BiPolynomial& BiPolynomial::operator+=(const BiPolynomial& o)
{
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

BiPolynomial& BiPolynomial::operator-=(const BiPolynomial& o)
{
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

BiPolynomial operator*(const BiPolynomial& a, const BiPolynomial& b)
{
    BiPolynomial r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return r;
}

IntPolynomial BiPolynomial::specialize_t(const mpz_class& t0) const
{
    const int dx = degree_x();
    if (dx < 0) return {};
    std::vector<mpz_class> v(static_cast<std::size_t>(dx) + 1);
    mpz_class tp;
    for (const auto& [k, c] : terms_) {
        mpz_pow_ui(tp.get_mpz_t(), t0.get_mpz_t(), k.first);
        v[k.second] += c * tp;
    }
    return IntPolynomial(std::move(v));
}

IntPolynomial BiPolynomial::x_coefficient(unsigned j) const
{
    std::vector<mpz_class> v(static_cast<std::size_t>(std::max(degree_t(), 0)) + 1);
    for (const auto& [k, c] : terms_)
        if (k.second == j) v[k.first] = c;
    return IntPolynomial(std::move(v));
}

BiPolynomial BiPolynomial::reduce_mod(const mpz_class& m) const
{
    BiPolynomial r;
    mpz_class t;
    for (const auto& [k, c] : terms_) {
        mpz_fdiv_r(t.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (t != 0) r.terms_.emplace(k, t);
    }
    return r;
}

bool congruent_mod(const BiPolynomial& a, const BiPolynomial& b, const mpz_class& m)
{
    return (a - b).reduce_mod(m).is_zero();
}

}  // namespace hcert::exact
