#include "hcert/elliptic/xmap.hpp"

#include "hcert/exact/mod_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace hcert::elliptic {

namespace {

// a monic: a coprime image modulo a prime proves coprimality over Q, since
// the gcd over Q reduces to a common factor mod q.
bool coprime(const IntPolynomial& a, const IntPolynomial& b)
{
    exact::u64 q = 1000003;
    for (int tries = 0; tries < 8; ++tries, q = exact::next_prime(q + 1)) {
        const auto ga = gcd(exact::ModPolynomial::reduce(a, q), exact::ModPolynomial::reduce(b, q));
        if (ga.degree() == 0) return true;
    }
    return gcd(a, b).degree() == 0;
}

}  // namespace

std::vector<IntPolynomial> division_polynomials(const CurveQ& e, int count)
{
    const long limit = std::max(count, 5);
    const mpz_class& A = e.a4();
    const mpz_class& B = e.a6();
    const IntPolynomial r = IntPolynomial(std::vector<mpz_class>{4 * B, 4 * A, 0, 4});
    const IntPolynomial r2 = r * r;
    std::vector<IntPolynomial> f(static_cast<std::size_t>(limit));
    f[0] = IntPolynomial();
    f[1] = IntPolynomial{1};
    f[2] = IntPolynomial{1};
    f[3] = IntPolynomial(std::vector<mpz_class>{-A * A, 12 * B, 6 * A, 0, 3});
    f[4] = IntPolynomial(std::vector<mpz_class>{-16 * B * B - 2 * A * A * A, -8 * A * B, -10 * A * A, 40 * B, 10 * A, 0, 2});
    for (long k = 5; k < limit; ++k) {
        const std::size_t m = static_cast<std::size_t>(k / 2);
        if (k % 2 == 1) {
            const IntPolynomial t1 = f[m + 2] * power(f[m], 3);
            const IntPolynomial t2 = f[m - 1] * power(f[m + 1], 3);
            f[static_cast<std::size_t>(k)] = (m % 2 == 0) ? r2 * t1 - t2 : t1 - r2 * t2;
        } else {
            f[static_cast<std::size_t>(k)] =
                f[m] * (f[m + 2] * f[m - 1] * f[m - 1] - f[m - 2] * f[m + 1] * f[m + 1]);
        }
    }
    f.resize(static_cast<std::size_t>(count));
    return f;
}

XMap xmap(const CurveQ& e, int m)
{
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("x-map needs odd m >= 3");
    const auto f = division_polynomials(e, m + 2);
    const IntPolynomial r = IntPolynomial(std::vector<mpz_class>{4 * e.a6(), 4 * e.a4(), 0, 4});
    const auto& fm = f[static_cast<std::size_t>(m)];
    XMap out;
    out.m = m;
    out.b = fm * fm;
    out.a = IntPolynomial::x() * out.b - r * f[static_cast<std::size_t>(m - 1)] * f[static_cast<std::size_t>(m + 1)];
    const int m2 = m * m;
    if (out.a.degree() != m2 || out.a.leading() != 1) throw std::logic_error("x-map numerator is not monic of degree m^2");
    if (out.b.degree() != m2 - 1 || out.b.leading() != m2)
        throw std::logic_error("x-map denominator has the wrong degree or leading coefficient");
    if (!coprime(out.a, out.b)) throw std::logic_error("x-map numerator and denominator share a factor");
    return out;
}

}  // namespace hcert::elliptic
