#include "hcert/heights/algebraic.hpp"

#include "hcert/exact/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace hcert::heights {

using namespace exact;

namespace {

IntPolynomial normalized(const IntPolynomial& p) { return p.primitive_part(); }

// Isolating balls that meet the approximation.
std::vector<ComplexBall> matching(const std::vector<ComplexBall>& roots, const ComplexBall& approx)
{
    std::vector<ComplexBall> hit;
    for (const auto& r : roots)
        if (r.overlaps(approx)) hit.push_back(r);
    return hit;
}

}  // namespace

std::vector<ComplexBall> sorted_roots(const IntPolynomial& p, unsigned bits)
{
    auto roots = isolate_roots(p, bits);
    std::sort(roots.begin(), roots.end(), [](const ComplexBall& a, const ComplexBall& b) {
        int c = compare(a.re(), b.re());
        if (c != 0) return c < 0;
        return a.im() < b.im();
    });
    return roots;
}

AlgebraicNumber AlgebraicNumber::select(const IntPolynomial& p, const ComplexBall& approx, int prime_budget)
{
    const IntPolynomial q = normalized(p);
    AlgebraicNumber a;
    a.min_poly = q;
    a.irreducibility = galois::certify_irreducible(q, prime_budget);
    for (unsigned bits : {64u, 128u, 256u, 512u}) {
        auto hit = matching(isolate_roots(q, bits), approx);
        if (hit.size() == 1) {
            a.root = hit.front();
            return a;
        }
        if (hit.empty()) break;
    }
    throw std::domain_error("approximation does not select a unique root");
}

AlgebraicNumber AlgebraicNumber::from_root_index(const IntPolynomial& p, std::size_t index, int prime_budget)
{
    const IntPolynomial q = normalized(p);
    auto roots = sorted_roots(q);
    if (index >= roots.size()) throw std::out_of_range("root index out of range");
    AlgebraicNumber a;
    a.min_poly = q;
    a.root = roots[index];
    a.irreducibility = galois::certify_irreducible(q, prime_budget);
    return a;
}

AlgebraicNumber AlgebraicNumber::rational(const mpz_class& num, const mpz_class& den)
{
    if (den == 0) throw std::domain_error("zero denominator");
    AlgebraicNumber a;
    a.min_poly = normalized(IntPolynomial(std::vector<mpz_class>{-num, den}));
    a.root = isolate_roots(a.min_poly, 64).front();
    a.irreducibility.kind = galois::IrreducibilityCertificate::Kind::linear;
    return a;
}

IntPolynomial power_polynomial(const IntPolynomial& p, unsigned k)
{
    const int n = p.degree();
    if (n < 1) throw std::domain_error("power polynomial needs degree >= 1");
    if (k == 0) throw std::invalid_argument("exponent must be positive");
    // e_j of the roots of p.
    std::vector<mpq_class> e(static_cast<std::size_t>(n) + 1);
    e[0] = 1;
    for (int j = 1; j <= n; ++j) {
        e[static_cast<std::size_t>(j)] = mpq_class(p.coeff(static_cast<std::size_t>(n - j)), p.leading());
        e[static_cast<std::size_t>(j)].canonicalize();
        if (j % 2) e[static_cast<std::size_t>(j)] = -e[static_cast<std::size_t>(j)];
    }
    const std::size_t top = static_cast<std::size_t>(n) * k;
    std::vector<mpq_class> s(top + 1);
    s[0] = n;
    for (std::size_t m = 1; m <= top; ++m) {
        mpq_class acc = 0;
        for (std::size_t j = 1; j < m && j <= static_cast<std::size_t>(n); ++j) {
            mpq_class t = e[j] * s[m - j];
            acc += (j % 2) ? t : mpq_class(-t);
        }
        if (m <= static_cast<std::size_t>(n)) {
            mpq_class t = e[m] * static_cast<long>(m);
            acc += (m % 2) ? t : mpq_class(-t);
        }
        s[m] = acc;
    }
    // Elementary symmetric functions of the k-th powers.
    std::vector<mpq_class> E(static_cast<std::size_t>(n) + 1);
    E[0] = 1;
    for (int m = 1; m <= n; ++m) {
        mpq_class acc = 0;
        for (int j = 1; j <= m; ++j) {
            mpq_class t = E[static_cast<std::size_t>(m - j)] * s[static_cast<std::size_t>(j) * k];
            acc += (j % 2) ? t : mpq_class(-t);
        }
        E[static_cast<std::size_t>(m)] = acc / m;
    }
    mpz_class den = 1;
    for (const auto& v : E) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        mpq_class v = E[static_cast<std::size_t>(j)] * den;
        if (j % 2) v = -v;
        c[static_cast<std::size_t>(n - j)] = v.get_num();
    }
    return IntPolynomial(c).primitive_part();
}

AlgebraicNumber power(const AlgebraicNumber& a, unsigned k)
{
    IntPolynomial q = squarefree_part(power_polynomial(a.min_poly, k));
    ComplexBall approx = a.root.pow(k);
    return AlgebraicNumber::select(q, approx);
}

AlgebraicNumber inverse(const AlgebraicNumber& a)
{
    if (a.min_poly.coeff(0) == 0) throw std::domain_error("inverse of zero");
    return AlgebraicNumber::select(reverse(a.min_poly), a.root.inverse());
}

AlgebraicNumber negate(const AlgebraicNumber& a)
{
    return AlgebraicNumber::select(negate_variable(a.min_poly), ComplexBall::exact(0L, a.root.prec()) - a.root);
}

AlgebraicNumber shift(const AlgebraicNumber& a, long c)
{
    return AlgebraicNumber::select(taylor_shift(a.min_poly, -c), a.root + ComplexBall::exact(c, a.root.prec()));
}

}  // namespace hcert::heights
