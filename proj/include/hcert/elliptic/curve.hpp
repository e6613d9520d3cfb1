#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace hcert::elliptic {

/// y^2 = x^3 + a4 x + a6 over Q with nonzero discriminant -16(4a4^3 + 27a6^2).
class CurveQ {
public:
    /// Throws std::domain_error("singular curve") when the discriminant vanishes.
    CurveQ(mpz_class a4, mpz_class a6);

    const mpz_class& a4() const { return a4_; }
    const mpz_class& a6() const { return a6_; }
    const mpz_class& disc() const { return disc_; }
    std::string to_string() const;

private:
    mpz_class a4_, a6_, disc_;
};

/// Point of E(Q); the point at infinity has `infinity` set.
struct RationalPoint {
    bool infinity = true;
    mpq_class x, y;

    static RationalPoint at_infinity() { return {}; }
    static RationalPoint affine(mpq_class x, mpq_class y) { return {false, std::move(x), std::move(y)}; }
    friend bool operator==(const RationalPoint& a, const RationalPoint& b)
    {
        if (a.infinity || b.infinity) return a.infinity == b.infinity;
        return a.x == b.x && a.y == b.y;
    }
};

bool on_curve(const CurveQ& e, const RationalPoint& p);
RationalPoint negate(const RationalPoint& p);
RationalPoint add(const CurveQ& e, const RationalPoint& p, const RationalPoint& q);
RationalPoint dbl(const CurveQ& e, const RationalPoint& p);
/// [k]P for any integer k.
RationalPoint multiply(const CurveQ& e, const RationalPoint& p, long k);
/// Smallest n in [1, max_order] with [n]P = O.
std::optional<int> torsion_order(const CurveQ& e, const RationalPoint& p, int max_order = 12);

/// x([2]P) from x(P) = num/den, via the duplication polynomials
/// F = X^4 - 2aX^2Z^2 - 8bXZ^3 + a^2Z^4 and G = 4Z(X^3 + aXZ^2 + bZ^3).
/// Returns nullopt when G vanishes, i.e. [2]P = O.
std::optional<mpq_class> double_x(const CurveQ& e, const mpq_class& x);

}  // namespace hcert::elliptic
