#include "hcert/galois/osada.hpp"

#include "hcert/exact/resultant.hpp"

#include <stdexcept>

namespace hcert::galois {

using namespace exact;

IntPolynomial osada_polynomial(long n)
{
    if (n < 2) throw std::invalid_argument("degree must be at least 2");
    return IntPolynomial::monomial(1, static_cast<std::size_t>(n)) - IntPolynomial{1, 1};
}

namespace {

mpz_class pow_si(long base, long e)
{
    mpz_class r;
    mpz_class b(base);
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

}  // namespace

OsadaDiscCheck osada_disc_check(long n)
{
    OsadaDiscCheck c;
    c.n = n;
    c.disc = discriminant(osada_polynomial(n));
    const mpz_class tail = pow_si(n - 1, n - 1);
    c.expected_abs = pow_si(n, n) + (n % 2 == 0 ? tail : mpz_class(-tail));
    c.ok = abs(c.disc) == abs(c.expected_abs);
    return c;
}

CoprimalityCheck coprimality_check(long n, const mpz_class& delta)
{
    if (n < 5) throw std::invalid_argument("coprimality check needs n >= 5");
    if (delta <= 0 || !mpz_divisible_p(mpz_class(n).get_mpz_t(), delta.get_mpz_t()))
        throw std::invalid_argument("hypothesis violated");
    CoprimalityCheck c;
    c.n = n;
    c.delta = delta;
    c.disc = discriminant(osada_polynomial(n));
    mpz_gcd(c.gcd_delta_disc.get_mpz_t(), delta.get_mpz_t(), c.disc.get_mpz_t());
    const mpz_class nn = pow_si(n, n), tail = pow_si(n - 1, n - 1);
    const mpz_class plus = nn + tail, minus = nn - tail, nz(n);
    mpz_gcd(c.gcd_plus.get_mpz_t(), nz.get_mpz_t(), plus.get_mpz_t());
    mpz_gcd(c.gcd_minus.get_mpz_t(), nz.get_mpz_t(), minus.get_mpz_t());
    c.ok = c.gcd_delta_disc == 1 && c.gcd_plus == 1 && c.gcd_minus == 1;
    return c;
}

}  // namespace hcert::galois
