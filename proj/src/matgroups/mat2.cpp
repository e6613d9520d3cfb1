#include "hcert/matgroups/mat2.hpp"

#include <stdexcept>

namespace hcert::matgroups {

namespace {

bool is_prime_u32(u32 p)
{
    if (p < 2) return false;
    for (u32 d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

Zmod::Zmod(u32 p, u32 n) : p_(p), n_(n), m_(1)
{
    if (!is_prime_u32(p)) throw std::invalid_argument("modulus base must be prime");
    if (n == 0) throw std::invalid_argument("exponent must be positive");
    for (u32 i = 0; i < n; ++i) {
        if (static_cast<u64>(m_) * p >= (1u << 16)) throw std::invalid_argument("modulus too large");
        m_ *= p;
    }
}

u32 Zmod::reduce(long long v) const
{
    long long r = v % static_cast<long long>(m_);
    if (r < 0) r += m_;
    return static_cast<u32>(r);
}

u32 Zmod::pow(u32 a, u64 e) const
{
    u32 r = 1 % m_;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

u32 Zmod::inv(u32 a) const
{
    if (!is_unit(a)) throw std::domain_error("not a unit");
    long long t = 0, nt = 1, r = m_, nr = a;
    while (nr) {
        long long q = r / nr;
        long long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    return reduce(t);
}

u64 Zmod::order(u32 a) const
{
    if (!is_unit(a)) throw std::domain_error("not a unit");
    u64 k = 1;
    u32 x = a % m_;
    while (x != 1 % m_) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

Mat2Mod Mat2Mod::of(const Zmod& r, long long a, long long b, long long c, long long d)
{
    return {r.reduce(a), r.reduce(b), r.reduce(c), r.reduce(d)};
}

u32 Mat2Mod::det(const Zmod& r) const { return r.sub(r.mul(a, d), r.mul(b, c)); }

u64 Mat2Mod::code(const Zmod& r) const
{
    const u64 m = r.modulus();
    return a + m * (b + m * (c + m * static_cast<u64>(d)));
}

Mat2Mod Mat2Mod::decode(const Zmod& r, u64 code)
{
    const u64 m = r.modulus();
    Mat2Mod x;
    x.a = static_cast<u32>(code % m);
    code /= m;
    x.b = static_cast<u32>(code % m);
    code /= m;
    x.c = static_cast<u32>(code % m);
    x.d = static_cast<u32>(code / m);
    return x;
}

std::string Mat2Mod::to_string() const
{
    return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" + std::to_string(c) + "," + std::to_string(d) +
           "]]";
}

Mat2Mod mul(const Zmod& r, const Mat2Mod& x, const Mat2Mod& y)
{
    const u64 m = r.modulus();
    return {static_cast<u32>((static_cast<u64>(x.a) * y.a + static_cast<u64>(x.b) * y.c) % m),
            static_cast<u32>((static_cast<u64>(x.a) * y.b + static_cast<u64>(x.b) * y.d) % m),
            static_cast<u32>((static_cast<u64>(x.c) * y.a + static_cast<u64>(x.d) * y.c) % m),
            static_cast<u32>((static_cast<u64>(x.c) * y.b + static_cast<u64>(x.d) * y.d) % m)};
}

Mat2Mod inverse(const Zmod& r, const Mat2Mod& x)
{
    const u32 di = r.inv(x.det(r));
    return {r.mul(x.d, di), r.mul(r.neg(x.b), di), r.mul(r.neg(x.c), di), r.mul(x.a, di)};
}

Mat2Mod pow(const Zmod& r, Mat2Mod x, u64 e)
{
    Mat2Mod acc = Mat2Mod::identity();
    while (e) {
        if (e & 1) acc = mul(r, acc, x);
        x = mul(r, x, x);
        e >>= 1;
    }
    return acc;
}

u64 order(const Zmod& r, const Mat2Mod& x)
{
    if (!x.in_gl2(r)) throw std::domain_error("matrix is not invertible");
    u64 k = 1;
    Mat2Mod y = x;
    while (!y.is_identity()) {
        y = mul(r, y, x);
        ++k;
    }
    return k;
}

Mat2Mod reduce_to(const Zmod& from, const Zmod& to, const Mat2Mod& x)
{
    if (from.p() != to.p() || to.n() > from.n()) throw std::invalid_argument("incompatible moduli");
    const u32 m = to.modulus();
    return {x.a % m, x.b % m, x.c % m, x.d % m};
}

}  // namespace hcert::matgroups
