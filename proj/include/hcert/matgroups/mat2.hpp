#pragma once

#include <cstdint>
#include <string>

namespace hcert::matgroups {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

/// Z / p^n Z with p prime; p^n is kept below 2^16 so that matrices pack
/// into one 64-bit code.
class Zmod {
public:
    Zmod(u32 p, u32 n);
    u32 p() const { return p_; }
    u32 n() const { return n_; }
    u32 modulus() const { return m_; }
    u32 add(u32 a, u32 b) const { u32 s = a + b; return s >= m_ ? s - m_ : s; }
    u32 sub(u32 a, u32 b) const { return a >= b ? a - b : a + m_ - b; }
    u32 mul(u32 a, u32 b) const { return static_cast<u32>(static_cast<u64>(a) * b % m_); }
    u32 neg(u32 a) const { return a == 0 ? 0 : m_ - a; }
    u32 reduce(long long v) const;
    bool is_unit(u32 a) const { return a % p_ != 0; }
    u32 inv(u32 a) const;
    u32 pow(u32 a, u64 e) const;
    /// Multiplicative order of a unit.
    u64 order(u32 a) const;
    friend bool operator==(const Zmod& a, const Zmod& b) { return a.m_ == b.m_; }

private:
    u32 p_, n_, m_;
};

/// 2x2 matrix [[a, b], [c, d]] over Z / p^n Z.
struct Mat2Mod {
    u32 a = 1, b = 0, c = 0, d = 1;

    static Mat2Mod identity() { return {}; }
    static Mat2Mod of(const Zmod& r, long long a, long long b, long long c, long long d);
    u32 det(const Zmod& r) const;
    bool in_gl2(const Zmod& r) const { return r.is_unit(det(r)); }
    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
    /// Dense code a + N b + N^2 c + N^3 d.
    u64 code(const Zmod& r) const;
    static Mat2Mod decode(const Zmod& r, u64 code);
    std::string to_string() const;
    friend bool operator==(const Mat2Mod& x, const Mat2Mod& y)
    {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
};

Mat2Mod mul(const Zmod& r, const Mat2Mod& x, const Mat2Mod& y);
/// Throws std::domain_error when x is not invertible.
Mat2Mod inverse(const Zmod& r, const Mat2Mod& x);
Mat2Mod pow(const Zmod& r, Mat2Mod x, u64 e);
/// Order of x in GL_2(Z/p^n Z).
u64 order(const Zmod& r, const Mat2Mod& x);
/// Reduction of entries modulo p^k for k <= n.
Mat2Mod reduce_to(const Zmod& from, const Zmod& to, const Mat2Mod& x);

}  // namespace hcert::matgroups
