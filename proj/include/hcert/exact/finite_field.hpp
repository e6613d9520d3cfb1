#pragma once

// Finite fields F_p and F_{p^k} plus dense polynomial algorithms over them.
// Elements are encoded as integers in [0, q); for F_{p^k} the code is the
// base-p digit string of the coefficient vector in F_p[Y]/(m(Y)).

#include <cstdint>
#include <vector>

namespace hcert::exact {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Deterministic for all 64-bit inputs.
bool is_prime(u64 n);
/// Smallest prime >= n.
u64 next_prime(u64 n);
u64 pow_mod(u64 base, u64 exp, u64 mod);
u64 inv_mod(u64 a, u64 mod);
/// Distinct prime factors, ascending (trial division; n < 2^40 expected).
std::vector<u64> prime_factors(u64 n);

class PrimeField {
public:
    static constexpr bool is_prime_field = true;
    /// p prime below 2^40, which keeps the lazy 128-bit accumulators exact.
    explicit PrimeField(u64 p);

    u64 characteristic() const { return p_; }
    u64 order() const { return p_; }
    u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p_ ? s - p_ : s; }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
    u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
    u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p_); }
    u64 inv(u64 a) const;

private:
    u64 p_;
};

class ExtensionField {
public:
    static constexpr bool is_prime_field = false;
    /// F_{p^k}; p prime, q = p^k kept below 2^22 so that log tables stay small.
    ExtensionField(u64 p, unsigned k);

    u64 characteristic() const { return p_; }
    unsigned degree() const { return k_; }
    u64 order() const { return q_; }
    u64 add(u64 a, u64 b) const;
    u64 sub(u64 a, u64 b) const;
    u64 neg(u64 a) const;
    u64 mul(u64 a, u64 b) const;
    u64 inv(u64 a) const;
    /// Defining polynomial of the extension, monic, ascending coefficients.
    const std::vector<u64>& modulus_poly() const { return modulus_; }
    /// Embeds an element of the prime field.
    u64 from_prime(u64 a) const { return a % p_; }
    u64 pow(u64 a, u64 e) const;

private:
    u64 p_;
    unsigned k_;
    u64 q_;
    std::vector<u64> modulus_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_;
};

namespace fpoly {

using Coeffs = std::vector<u64>;

inline void trim(Coeffs& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }

template <class F>
Coeffs mul(const F& f, const Coeffs& a, const Coeffs& b)
{
    if (a.empty() || b.empty()) return {};
    Coeffs out(a.size() + b.size() - 1, 0);
    if constexpr (F::is_prime_field) {
        const u64 p = f.characteristic();
        std::vector<u128> acc(out.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            const u128 ai = a[i];
            for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += ai * b[j];
        }
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<u64>(acc[i] % p);
    } else {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
        }
    }
    trim(out);
    return out;
}

/// Remainder and (optionally) quotient of a by m; m nonzero.
template <class F>
Coeffs divrem(const F& f, const Coeffs& a, const Coeffs& m, Coeffs* quotient = nullptr)
{
    const std::size_t dm = m.size() - 1;
    if (a.size() <= dm) {
        if (quotient) quotient->clear();
        return a;
    }
    const u64 inv_lead = f.inv(m.back());
    if (quotient) quotient->assign(a.size() - dm, 0);
    if constexpr (F::is_prime_field) {
        const u64 p = f.characteristic();
        std::vector<u128> r(a.begin(), a.end());
        // Accumulators are kept as r + k*p^2 >= 0 by adding (p - c) * m_j.
        for (std::size_t top = a.size(); top-- > dm;) {
            const u64 c = f.mul(static_cast<u64>(r[top] % p), inv_lead);
            if (quotient) (*quotient)[top - dm] = c;
            if (!c) continue;
            const u128 nc = p - c;
            const std::size_t base = top - dm;
            for (std::size_t j = 0; j < dm; ++j) r[base + j] += nc * m[j];
        }
        Coeffs out(dm);
        for (std::size_t i = 0; i < dm; ++i) out[i] = static_cast<u64>(r[i] % p);
        trim(out);
        if (quotient) trim(*quotient);
        return out;
    } else {
        Coeffs r = a;
        for (std::size_t top = a.size(); top-- > dm;) {
            const u64 c = f.mul(r[top], inv_lead);
            if (quotient) (*quotient)[top - dm] = c;
            if (!c) continue;
            const std::size_t base = top - dm;
            for (std::size_t j = 0; j <= dm; ++j) r[base + j] = f.sub(r[base + j], f.mul(c, m[j]));
        }
        r.resize(dm);
        trim(r);
        if (quotient) trim(*quotient);
        return r;
    }
}

template <class F>
Coeffs make_monic(const F& f, Coeffs a)
{
    if (a.empty() || a.back() == 1) return a;
    const u64 inv = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, inv);
    return a;
}

/// Monic gcd (empty if both inputs are zero).
template <class F>
Coeffs gcd(const F& f, Coeffs a, Coeffs b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Coeffs r = divrem(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(f, std::move(a));
}

template <class F>
Coeffs derivative(const F& f, const Coeffs& a)
{
    if (a.size() <= 1) return {};
    Coeffs d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) {
        // Prime-field elements keep their code inside the extension encoding.
        d[i - 1] = f.mul(static_cast<u64>(i % f.characteristic()), a[i]);
    }
    trim(d);
    return d;
}

template <class F>
Coeffs sub(const F& f, Coeffs a, const Coeffs& b)
{
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
    trim(a);
    return a;
}

template <class F>
Coeffs powmod(const F& f, Coeffs base, u64 e, const Coeffs& m)
{
    Coeffs result{1};
    result = divrem(f, result, m);
    base = divrem(f, base, m);
    while (e) {
        if (e & 1) result = divrem(f, mul(f, result, base), m);
        e >>= 1;
        if (e) base = divrem(f, mul(f, base, base), m);
    }
    return result;
}

template <class F>
bool is_squarefree(const F& f, const Coeffs& a)
{
    if (a.size() <= 2) return !a.empty();
    Coeffs d = derivative(f, a);
    if (d.empty()) return false;
    return gcd(f, a, d).size() == 1;
}

/// Degrees of the monic irreducible factors of a squarefree polynomial,
/// ascending, via distinct-degree factorization. The q-power Frobenius is
/// applied through the precomputed images X^(q*j) mod a.
template <class F>
std::vector<int> distinct_degree_factorization(const F& f, const Coeffs& a_in)
{
    Coeffs a = make_monic(f, a_in);
    trim(a);
    const int n = degree(a);
    std::vector<int> degrees;
    if (n <= 0) return degrees;
    if (n == 1) return {1};

    const std::size_t nn = static_cast<std::size_t>(n);
    std::vector<Coeffs> rows(nn);
    rows[0] = Coeffs{1};
    const Coeffs xq = powmod(f, Coeffs{0, 1}, f.order(), a);
    for (std::size_t j = 1; j < nn; ++j) rows[j] = divrem(f, mul(f, rows[j - 1], xq), a);

    auto frobenius = [&](const Coeffs& h) {
        Coeffs out(nn, 0);
        if constexpr (F::is_prime_field) {
            std::vector<u128> acc(nn, 0);
            for (std::size_t j = 0; j < h.size(); ++j) {
                if (!h[j]) continue;
                const u128 hj = h[j];
                for (std::size_t i = 0; i < rows[j].size(); ++i) acc[i] += hj * rows[j][i];
            }
            for (std::size_t i = 0; i < nn; ++i) out[i] = static_cast<u64>(acc[i] % f.characteristic());
        } else {
            for (std::size_t j = 0; j < h.size(); ++j) {
                if (!h[j]) continue;
                for (std::size_t i = 0; i < rows[j].size(); ++i) out[i] = f.add(out[i], f.mul(h[j], rows[j][i]));
            }
        }
        trim(out);
        return out;
    };

    Coeffs rest = a;
    Coeffs h = xq;  // X^(q^i) mod a
    const Coeffs x{0, 1};
    for (int i = 1; 2 * i <= degree(rest); ++i) {
        if (i > 1) h = frobenius(h);
        Coeffs g = gcd(f, rest, divrem(f, sub(f, h, x), rest));
        if (degree(g) > 0) {
            for (int c = 0; c < degree(g) / i; ++c) degrees.push_back(i);
            Coeffs q;
            divrem(f, rest, g, &q);
            rest = make_monic(f, q);
        }
    }
    if (degree(rest) > 0) degrees.push_back(degree(rest));
    return degrees;
}

template <class F>
bool is_irreducible(const F& f, const Coeffs& a)
{
    if (degree(a) <= 0) return false;
    if (degree(a) == 1) return true;
    if (!is_squarefree(f, a)) return false;
    auto d = distinct_degree_factorization(f, a);
    return d.size() == 1;
}

}  // namespace fpoly

}  // namespace hcert::exact
