#include "hcert/exact/finite_field.hpp"

#include <stdexcept>

namespace hcert::exact {

u64 pow_mod(u64 base, u64 exp, u64 mod)
{
    u128 result = 1 % mod;
    u128 b = base % mod;
    while (exp) {
        if (exp & 1) result = result * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<u64>(result);
}

u64 inv_mod(u64 a, u64 mod)
{
    // Extended Euclid on signed 128-bit values.
    __int128 t = 0, new_t = 1;
    __int128 r = mod, new_r = a % mod;
    while (new_r != 0) {
        __int128 q = r / new_r;
        __int128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::domain_error("element is not invertible");
    if (t < 0) t += mod;
    return static_cast<u64>(t);
}

bool is_prime(u64 n)
{
    if (n < 2) return false;
    for (u64 small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == small) return true;
        if (n % small == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = static_cast<u64>(static_cast<u128>(x) * x % n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 next_prime(u64 n)
{
    if (n <= 2) return 2;
    if ((n & 1) == 0) ++n;
    while (!is_prime(n)) n += 2;
    return n;
}

std::vector<u64> prime_factors(u64 n)
{
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

PrimeField::PrimeField(u64 p) : p_(p)
{
    if (p >= (u64{1} << 40) || !is_prime(p)) throw std::invalid_argument("prime field needs a prime below 2^40");
}

u64 PrimeField::inv(u64 a) const
{
    if (a % p_ == 0) throw std::domain_error("division by zero in prime field");
    return inv_mod(a, p_);
}

ExtensionField::ExtensionField(u64 p, unsigned k) : p_(p), k_(k), q_(1)
{
    if (!is_prime(p) || k == 0) throw std::invalid_argument("extension field needs prime p and k >= 1");
    for (unsigned i = 0; i < k; ++i) {
        q_ *= p;
        if (q_ >= (u64{1} << 22)) throw std::invalid_argument("extension field too large for table arithmetic");
    }
    const PrimeField fp(p);

    // Smallest monic irreducible of degree k in lexicographic order of the
    // lower coefficients.
    if (k == 1) {
        modulus_ = {0, 1};
    } else {
        std::vector<u64> cand(k + 1, 0);
        cand[k] = 1;
        for (u64 code = 0;; ++code) {
            u64 c = code;
            for (unsigned i = 0; i < k; ++i) {
                cand[i] = c % p;
                c /= p;
            }
            if (cand[0] != 0 && fpoly::is_irreducible(fp, cand)) break;
        }
        modulus_ = cand;
    }

    auto to_vec = [&](u64 code) {
        std::vector<u64> v(k, 0);
        for (unsigned i = 0; i < k; ++i) {
            v[i] = code % p;
            code /= p;
        }
        fpoly::trim(v);
        return v;
    };
    auto to_code = [&](const std::vector<u64>& v) {
        u64 code = 0;
        for (std::size_t i = v.size(); i-- > 0;) code = code * p + v[i];
        return code;
    };
    auto slow_mul = [&](u64 a, u64 b) {
        if (k == 1) return fp.mul(a, b);
        return to_code(fpoly::divrem(fp, fpoly::mul(fp, to_vec(a), to_vec(b)), modulus_));
    };

    const auto factors = prime_factors(q_ - 1);
    u64 gen = 0;
    for (u64 g = 1; g < q_; ++g) {
        bool primitive = true;
        for (u64 f : factors) {
            u64 e = (q_ - 1) / f, acc = 1, base = g;
            while (e) {
                if (e & 1) acc = slow_mul(acc, base);
                base = slow_mul(base, base);
                e >>= 1;
            }
            if (acc == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen = g;
            break;
        }
    }
    if (gen == 0) throw std::logic_error("no primitive element found");

    log_.assign(q_, 0);
    exp_.assign(q_ - 1, 0);
    u64 acc = 1;
    for (u64 i = 0; i + 1 < q_; ++i) {
        exp_[i] = static_cast<std::uint32_t>(acc);
        log_[acc] = static_cast<std::uint32_t>(i);
        acc = slow_mul(acc, gen);
    }
}

u64 ExtensionField::add(u64 a, u64 b) const
{
    u64 out = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
        u64 d = (a % p_ + b % p_) % p_;
        out += d * scale;
        scale *= p_;
        a /= p_;
        b /= p_;
    }
    return out;
}

u64 ExtensionField::neg(u64 a) const
{
    u64 out = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
        u64 d = a % p_;
        out += (d == 0 ? 0 : p_ - d) * scale;
        scale *= p_;
        a /= p_;
    }
    return out;
}

u64 ExtensionField::sub(u64 a, u64 b) const { return add(a, neg(b)); }

u64 ExtensionField::mul(u64 a, u64 b) const
{
    if (a == 0 || b == 0) return 0;
    u64 e = static_cast<u64>(log_[a]) + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
}

u64 ExtensionField::inv(u64 a) const
{
    if (a == 0) throw std::domain_error("division by zero in extension field");
    u64 e = log_[a] == 0 ? 0 : q_ - 1 - log_[a];
    return exp_[e];
}

u64 ExtensionField::pow(u64 a, u64 e) const
{
    if (a == 0) return e == 0 ? 1 : 0;
    u128 l = static_cast<u128>(log_[a]) * (e % (q_ - 1)) % (q_ - 1);
    return exp_[static_cast<std::size_t>(l)];
}

}  // namespace hcert::exact
