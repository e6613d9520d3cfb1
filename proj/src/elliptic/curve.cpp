#include "hcert/elliptic/curve.hpp"

#include "hcert/exact/resultant.hpp"

#include <stdexcept>

namespace hcert::elliptic {

CurveQ::CurveQ(mpz_class a4, mpz_class a6) : a4_(std::move(a4)), a6_(std::move(a6))
{
    disc_ = -16 * (4 * a4_ * a4_ * a4_ + 27 * a6_ * a6_);
    if (disc_ == 0) throw std::domain_error("singular curve");
}

std::string CurveQ::to_string() const
{
    return "y^2 = x^3 + (" + a4_.get_str() + ")x + (" + a6_.get_str() + ")";
}

bool on_curve(const CurveQ& e, const RationalPoint& p)
{
    if (p.infinity) return true;
    mpq_class rhs = p.x * p.x * p.x + mpq_class(e.a4()) * p.x + mpq_class(e.a6());
    return p.y * p.y == rhs;
}

RationalPoint negate(const RationalPoint& p)
{
    if (p.infinity) return p;
    return RationalPoint::affine(p.x, -p.y);
}

RationalPoint add(const CurveQ& e, const RationalPoint& p, const RationalPoint& q)
{
    if (p.infinity) return q;
    if (q.infinity) return p;
    mpq_class lambda;
    if (p.x == q.x) {
        if (p.y + q.y == 0) return RationalPoint::at_infinity();
        lambda = (3 * p.x * p.x + mpq_class(e.a4())) / (2 * p.y);
    } else {
        lambda = (q.y - p.y) / (q.x - p.x);
    }
    mpq_class x3 = lambda * lambda - p.x - q.x;
    mpq_class y3 = lambda * (p.x - x3) - p.y;
    return RationalPoint::affine(x3, y3);
}

RationalPoint dbl(const CurveQ& e, const RationalPoint& p) { return add(e, p, p); }

RationalPoint multiply(const CurveQ& e, const RationalPoint& p, long k)
{
    RationalPoint base = k < 0 ? negate(p) : p;
    unsigned long m = k < 0 ? 0ul - static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
    RationalPoint acc = RationalPoint::at_infinity();
    while (m) {
        if (m & 1ul) acc = add(e, acc, base);
        m >>= 1;
        if (m) base = dbl(e, base);
    }
    return acc;
}

std::optional<int> torsion_order(const CurveQ& e, const RationalPoint& p, int max_order)
{
    RationalPoint acc = p;
    for (int n = 1; n <= max_order; ++n) {
        if (acc.infinity) return n;
        acc = add(e, acc, p);
    }
    return std::nullopt;
}

std::optional<mpq_class> double_x(const CurveQ& e, const mpq_class& x)
{
    const mpz_class& X = x.get_num();
    const mpz_class& Z = x.get_den();
    const mpz_class& a = e.a4();
    const mpz_class& b = e.a6();
    const mpz_class X2 = X * X, Z2 = Z * Z, Z3 = Z2 * Z;
    mpz_class F = X2 * X2 - 2 * a * X2 * Z2 - 8 * b * X * Z3 + a * a * Z2 * Z2;
    mpz_class G = 4 * Z * (X2 * X + a * X * Z2 + b * Z3);
    if (G == 0) return std::nullopt;
    // X and Z are coprime, so gcd(F, G) divides the resultant of the two forms.
    const mpz_class res = abs(exact::resultant(exact::IntPolynomial(std::vector<mpz_class>{a * a, -8 * b, -2 * a, 0, 1}),
                                                   exact::IntPolynomial(std::vector<mpz_class>{4 * b, 4 * a, 0, 4})));
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), res.get_mpz_t(), mpz_class(F % res).get_mpz_t());
    if (g > 1) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mpz_class(G % g).get_mpz_t());
        mpz_divexact(F.get_mpz_t(), F.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(G.get_mpz_t(), G.get_mpz_t(), g.get_mpz_t());
    }
    if (G < 0) {
        F = -F;
        G = -G;
    }
    mpq_class r;
    r.get_num() = std::move(F);
    r.get_den() = std::move(G);
    return r;
}

}  // namespace hcert::elliptic
