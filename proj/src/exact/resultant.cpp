#include "hcert/exact/resultant.hpp"

#include <stdexcept>
#include <utility>

namespace hcert::exact {

namespace {

mpz_class pow(const mpz_class& b, unsigned long e)
{
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

IntPolynomial divide_coeffs(const IntPolynomial& p, const mpz_class& d)
{
    std::vector<mpz_class> v(p.coeffs().begin(), p.coeffs().end());
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    return IntPolynomial(std::move(v));
}

}  // namespace

mpz_class resultant(const IntPolynomial& p, const IntPolynomial& q)
{
    if (p.is_zero() || q.is_zero()) throw std::domain_error("zero polynomial");

    IntPolynomial a = p, b = q;
    int sign = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -1;
    }
    if (b.degree() == 0) return sign * pow(b.leading(), static_cast<unsigned long>(a.degree()));

    const mpz_class ca = a.content(), cb = b.content();
    mpz_class t = pow(ca, static_cast<unsigned long>(b.degree())) * pow(cb, static_cast<unsigned long>(a.degree()));
    a = divide_coeffs(a, ca);
    b = divide_coeffs(b, cb);

    mpz_class g = 1, h = 1;
    while (true) {
        const int delta = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
        IntPolynomial r = pseudo_remainder(a, b);
        if (r.is_zero()) return 0;
        a = std::move(b);
        b = divide_coeffs(r, g * pow(h, static_cast<unsigned long>(delta)));
        g = a.leading();
        // h <- h^(1 - delta) g^delta, exact because delta >= 1.
        if (delta == 0) {
            // unchanged
        } else {
            mpz_class num = pow(g, static_cast<unsigned long>(delta));
            mpz_class den = pow(h, static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (b.degree() <= 0) break;
    }
    // h <- h^(1 - deg a) lc(b)^deg a
    const auto da = static_cast<unsigned long>(a.degree());
    mpz_class num = pow(b.leading(), da);
    mpz_class den = pow(h, da - 1);
    mpz_class res;
    mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return sign * t * res;
}

mpz_class discriminant(const IntPolynomial& p)
{
    if (p.degree() < 1) throw std::domain_error("discriminant of a constant polynomial");
    if (p.degree() == 1) return 1;
    const long d = p.degree();
    mpz_class r = resultant(p, p.derivative());
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), r.get_mpz_t(), p.leading().get_mpz_t());
    if (((d * (d - 1)) / 2) & 1) out = -out;
    return out;
}

bool is_perfect_square(const mpz_class& n)
{
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

}  // namespace hcert::exact
