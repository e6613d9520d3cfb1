#include "hcert/exact/int_poly.hpp"

#include "hcert/exact/mod_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace hcert::exact {

namespace {

const mpz_class& zero_coeff()
{
    static const mpz_class z(0);
    return z;
}

std::vector<mpz_class> schoolbook(std::span<const mpz_class> a, std::span<const mpz_class> b)
{
    std::vector<mpz_class> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return out;
}

// Packs signed coefficients into one integer at 2^slot spacing.
mpz_class pack(std::span<const mpz_class> c, mp_bitcnt_t slot)
{
    mpz_class acc(0);
    for (std::size_t i = c.size(); i-- > 0;) {
        mpz_mul_2exp(acc.get_mpz_t(), acc.get_mpz_t(), slot);
        acc += c[i];
    }
    return acc;
}

// Inverse of pack for balanced digits in (-2^(slot-1), 2^(slot-1)].
std::vector<mpz_class> unpack(mpz_class v, mp_bitcnt_t slot, std::size_t count)
{
    std::vector<mpz_class> out(count);
    mpz_class half;
    mpz_ui_pow_ui(half.get_mpz_t(), 2, slot - 1);
    mpz_class digit;
    for (std::size_t i = 0; i < count; ++i) {
        mpz_fdiv_r_2exp(digit.get_mpz_t(), v.get_mpz_t(), slot);
        if (digit > half) digit -= half * 2;
        out[i] = digit;
        v -= digit;
        mpz_fdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), slot);
    }
    return out;
}

std::vector<mpz_class> kronecker(std::span<const mpz_class> a, std::span<const mpz_class> b)
{
    std::size_t abits = 0, bbits = 0;
    for (const auto& c : a) abits = std::max(abits, mpz_sizeinbase(c.get_mpz_t(), 2));
    for (const auto& c : b) bbits = std::max(bbits, mpz_sizeinbase(c.get_mpz_t(), 2));
    std::size_t terms = std::min(a.size(), b.size());
    std::size_t lenbits = 1;
    while ((std::size_t{1} << lenbits) < terms) ++lenbits;
    auto slot = static_cast<mp_bitcnt_t>(abits + bbits + lenbits + 2);
    mpz_class prod = pack(a, slot) * pack(b, slot);
    return unpack(prod, slot, a.size() + b.size() - 1);
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) { return IntPolynomial(std::vector<mpz_class>{c}); }

IntPolynomial IntPolynomial::monomial(const mpz_class& c, std::size_t degree)
{
    std::vector<mpz_class> v(degree + 1);
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPolynomial::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : zero_coeff();
}

const mpz_class& IntPolynomial::leading() const
{
    return coeffs_.empty() ? zero_coeff() : coeffs_.back();
}

mpz_class IntPolynomial::content() const
{
    mpz_class g(0);
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const
{
    if (is_zero()) return {};
    mpz_class g = content();
    if (leading() < 0) g = -g;
    std::vector<mpz_class> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::derivative() const
{
    if (coeffs_.size() <= 1) return {};
    std::vector<mpz_class> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-() const
{
    IntPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const
{
    mpz_class acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc *= x;
        acc += coeffs_[i];
    }
    return acc;
}

std::size_t IntPolynomial::max_coeff_bits() const
{
    std::size_t m = 0;
    for (const auto& c : coeffs_)
        if (c != 0) m = std::max(m, mpz_sizeinbase(c.get_mpz_t(), 2));
    return m;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const mpz_class& c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    // Kronecker substitution wins once both factors are moderately long.
    if (std::min(a.size(), b.size()) >= 24) return IntPolynomial(kronecker(a.coeffs_, b.coeffs_));
    return IntPolynomial(schoolbook(a.coeffs_, b.coeffs_));
}

IntPolynomial IntPolynomial::shift(std::size_t k) const
{
    if (is_zero()) return {};
    std::vector<mpz_class> v(coeffs_.size() + k);
    std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<std::ptrdiff_t>(k));
    return IntPolynomial(std::move(v));
}

IntPolynomial negate_variable(const IntPolynomial& p)
{
    std::vector<mpz_class> v(p.coeffs().begin(), p.coeffs().end());
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial reverse(const IntPolynomial& p)
{
    std::vector<mpz_class> v(p.coeffs().rbegin(), p.coeffs().rend());
    return IntPolynomial(std::move(v));
}

IntPolynomial taylor_shift(const IntPolynomial& p, const mpz_class& c)
{
    std::vector<mpz_class> v(p.coeffs().begin(), p.coeffs().end());
    const std::size_t n = v.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j-- > i;) mpz_addmul(v[j].get_mpz_t(), v[j + 1].get_mpz_t(), c.get_mpz_t());
    return IntPolynomial(std::move(v));
}

IntPolynomial power(const IntPolynomial& p, unsigned k)
{
    IntPolynomial result = IntPolynomial::constant(1);
    IntPolynomial base = p;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b)
{
    if (b.is_zero()) throw std::domain_error("zero polynomial");
    if (a.degree() < b.degree()) return a;
    std::vector<mpz_class> r(a.coeffs().begin(), a.coeffs().end());
    const std::size_t db = static_cast<std::size_t>(b.degree());
    const mpz_class& lb = b.leading();
    auto bc = b.coeffs();
    int e = a.degree() - b.degree() + 1;
    mpz_class lead;
    while (r.size() > db && !r.empty()) {
        if (r.back() == 0) {
            r.pop_back();
            for (auto& c : r) c *= lb;
            --e;
            continue;
        }
        lead = r.back();
        const std::size_t shift = r.size() - 1 - db;
        for (auto& c : r) c *= lb;
        for (std::size_t j = 0; j < db; ++j) mpz_submul(r[shift + j].get_mpz_t(), lead.get_mpz_t(), bc[j].get_mpz_t());
        r.pop_back();
        --e;
    }
    IntPolynomial rem(std::move(r));
    if (e > 0) {
        mpz_class f;
        mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
        rem *= f;
    }
    return rem;
}

std::pair<IntPolynomial, IntPolynomial> divide_integral(const IntPolynomial& a, const IntPolynomial& b)
{
    if (b.is_zero()) throw std::domain_error("zero polynomial");
    if (a.degree() < b.degree()) return {IntPolynomial{}, a};
    std::vector<mpz_class> r(a.coeffs().begin(), a.coeffs().end());
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<mpz_class> q(r.size() - db);
    auto bc = b.coeffs();
    const mpz_class& lb = b.leading();
    for (std::size_t k = q.size(); k-- > 0;) {
        mpz_class& top = r[k + db];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) throw std::domain_error("inexact polynomial division");
        mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[k + j].get_mpz_t(), q[k].get_mpz_t(), bc[j].get_mpz_t());
    }
    r.resize(db);
    return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b)
{
    auto [q, r] = divide_integral(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero()) return b.primitive_part() * b.content();
    if (b.is_zero()) return a.primitive_part() * a.content();
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    IntPolynomial u = a.primitive_part();
    IntPolynomial v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPolynomial r = pseudo_remainder(u, v);
        u = std::move(v);
        v = r.is_zero() ? IntPolynomial{} : r.primitive_part();
    }
    return u.primitive_part() * c;
}

IntPolynomial squarefree_part(const IntPolynomial& p)
{
    if (p.degree() <= 0) return p.primitive_part();
    if (!has_repeated_root(p)) return p.primitive_part();
    IntPolynomial g = gcd(p, p.derivative());
    return exact_quotient(p.primitive_part(), g.primitive_part()).primitive_part();
}

bool has_repeated_root(const IntPolynomial& p)
{
    if (p.degree() <= 1) return false;
    // A squarefree reduction modulo a prime not dividing the leading
    // coefficient proves squarefreeness over Q.
    std::uint64_t q = 1000003;
    for (int attempt = 0; attempt < 8; ++attempt, q = next_prime(q + 1)) {
        if (mpz_fdiv_ui(p.leading().get_mpz_t(), q) == 0) continue;
        if (ModPolynomial::reduce(p, q).is_squarefree()) return false;
    }
    return gcd(p, p.derivative()).degree() > 0;
}

}  // namespace hcert::exact
