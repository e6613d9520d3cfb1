#include "hcert/galois/irreducible.hpp"

#include "hcert/exact/mod_poly.hpp"
#include "hcert/exact/roots.hpp"

#include <stdexcept>

namespace hcert::galois {

using namespace exact;

namespace {

constexpr long kDivisorLimit = 1000000000000L;

std::vector<mpz_class> positive_divisors(mpz_class n)
{
    n = abs(n);
    std::vector<std::pair<mpz_class, int>> fac;
    for (unsigned long d = 2; mpz_class(d) * d <= n; ++d) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            int e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
                n /= d;
                ++e;
            }
            fac.emplace_back(mpz_class(d), e);
        }
    }
    if (n > 1) fac.emplace_back(n, 1);
    std::vector<mpz_class> divs{1};
    for (const auto& [q, e] : fac) {
        const std::size_t base = divs.size();
        mpz_class pw = 1;
        for (int i = 1; i <= e; ++i) {
            pw *= q;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pw);
        }
    }
    return divs;
}

// s^n p(r/s)
mpz_class homogeneous_value(const IntPolynomial& p, const mpz_class& r, const mpz_class& s)
{
    const int n = p.degree();
    std::vector<mpz_class> spows(static_cast<std::size_t>(n) + 1);
    spows[0] = 1;
    for (int i = 1; i <= n; ++i) spows[static_cast<std::size_t>(i)] = spows[static_cast<std::size_t>(i) - 1] * s;
    mpz_class acc = 0;
    for (int i = n; i >= 0; --i)
        acc = acc * r + p.coeff(static_cast<std::size_t>(i)) * spows[static_cast<std::size_t>(n - i)];
    return acc;
}

bool excludes_integers(const ComplexBall& c)
{
    // Imaginary part bounded away from zero, or real part strictly between
    // consecutive integers.
    Real a(kRadiusPrec);
    mpfr_abs(a.get(), c.im().get(), MPFR_RNDD);
    if (a > c.rad()) return true;
    Real lo(c.prec()), hi(c.prec());
    mpfr_sub(lo.get(), c.re().get(), c.rad().get(), MPFR_RNDD);
    mpfr_add(hi.get(), c.re().get(), c.rad().get(), MPFR_RNDU);
    mpfr_ceil(lo.get(), lo.get());
    mpfr_floor(hi.get(), hi.get());
    return lo > hi;
}

enum class SubsetResult { irreducible, reducible, ambiguous };

SubsetResult root_subset_search(const IntPolynomial& p, unsigned bits, IntPolynomial& factor)
{
    const int n = p.degree();
    const auto roots = isolate_roots(p, bits);
    const mpfr_prec_t prec = roots.front().prec();
    const ComplexBall lc = ComplexBall::exact(p.leading(), prec);
    bool ambiguous = false;
    for (int k = 1; k <= n / 2; ++k) {
        unsigned mask = (1u << k) - 1;
        while (mask < (1u << n)) {
            std::vector<ComplexBall> c{lc};
            for (int i = 0; i < n; ++i) {
                if (!(mask & (1u << i))) continue;
                std::vector<ComplexBall> next(c.size() + 1, ComplexBall(prec));
                for (std::size_t j = 0; j < c.size(); ++j) {
                    next[j + 1] = next[j + 1] + c[j];
                    next[j] = next[j] - roots[static_cast<std::size_t>(i)] * c[j];
                }
                c = std::move(next);
            }
            bool excluded = false;
            for (const auto& b : c)
                if (excludes_integers(b)) {
                    excluded = true;
                    break;
                }
            if (!excluded) {
                std::vector<mpz_class> z(c.size());
                for (std::size_t j = 0; j < c.size(); ++j) {
                    mpfr_get_z(z[j].get_mpz_t(), c[j].re().get(), MPFR_RNDN);
                }
                IntPolynomial u = IntPolynomial(z);
                if (u.degree() == k) {
                    u = u.primitive_part();
                    try {
                        (void)exact_quotient(p, u);
                        factor = u;
                        return SubsetResult::reducible;
                    } catch (const std::domain_error&) {
                    }
                }
                ambiguous = true;
            }
            // Next mask with the same popcount.
            const unsigned t = mask | (mask - 1);
            mask = (t + 1) | (((~t & -~t) - 1) >> (__builtin_ctz(mask) + 1));
        }
    }
    return ambiguous ? SubsetResult::ambiguous : SubsetResult::irreducible;
}

}  // namespace

std::string IrreducibilityCertificate::kind_name() const
{
    switch (kind) {
    case Kind::linear: return "linear";
    case Kind::by_prime: return "certified-by-prime";
    case Kind::by_degree_sieve: return "certified-by-degree-sieve";
    case Kind::by_root_subsets: return "certified-by-root-subsets";
    case Kind::reducible: return "reducible";
    case Kind::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::vector<char> degree_subset_sums(const std::vector<int>& degrees)
{
    int total = 0;
    for (int d : degrees) total += d;
    std::vector<char> ok(static_cast<std::size_t>(total) + 1, 0);
    ok[0] = 1;
    for (int d : degrees)
        for (int s = total; s >= d; --s)
            if (ok[static_cast<std::size_t>(s - d)]) ok[static_cast<std::size_t>(s)] = 1;
    return ok;
}

std::vector<std::pair<mpz_class, mpz_class>> small_rational_roots(const IntPolynomial& p)
{
    std::vector<std::pair<mpz_class, mpz_class>> out;
    if (p.degree() < 1) return out;
    const mpz_class& c0 = p.coeff(0);
    if (c0 == 0) {
        out.emplace_back(0, 1);
        return out;
    }
    if (abs(c0) > kDivisorLimit || abs(p.leading()) > kDivisorLimit) return out;
    const auto rs = positive_divisors(c0);
    const auto ss = positive_divisors(p.leading());
    for (const auto& s : ss)
        for (const auto& r : rs) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
            if (g != 1) continue;
            for (int sign : {1, -1}) {
                mpz_class rr = sign * r;
                if (homogeneous_value(p, rr, s) == 0) out.emplace_back(rr, s);
            }
        }
    return out;
}

IrreducibilityCertificate certify_irreducible(const IntPolynomial& p, int prime_budget)
{
    if (p.degree() < 1) throw std::invalid_argument("irreducibility needs degree >= 1");
    if (p.content() != 1) throw std::invalid_argument("polynomial must be primitive");
    IrreducibilityCertificate cert;
    const int n = p.degree();
    if (n == 1) {
        cert.kind = IrreducibilityCertificate::Kind::linear;
        return cert;
    }
    if (p.coeff(0) == 0) {
        cert.kind = IrreducibilityCertificate::Kind::reducible;
        cert.reducible_reason = "root at zero";
        cert.factor = IntPolynomial::x();
        return cert;
    }
    if (has_repeated_root(p)) {
        cert.kind = IrreducibilityCertificate::Kind::reducible;
        cert.reducible_reason = "repeated factor";
        cert.factor = gcd(p, p.derivative());
        return cert;
    }
    if (auto rr = small_rational_roots(p); !rr.empty()) {
        cert.kind = IrreducibilityCertificate::Kind::reducible;
        cert.reducible_reason = "rational root";
        cert.factor = IntPolynomial(std::vector<mpz_class>{-rr.front().first, rr.front().second});
        return cert;
    }

    std::vector<char> feasible(static_cast<std::size_t>(n) + 1, 1);
    int used = 0;
    for (u64 q = 2; used < prime_budget; q = next_prime(q + 1)) {
        if (mpz_divisible_ui_p(p.leading().get_mpz_t(), q)) continue;
        ModPolynomial r = ModPolynomial::reduce(p, q);
        if (!r.is_squarefree()) continue;
        ++used;
        std::vector<int> degs = factor_degrees_mod_p(r);
        cert.samples.push_back({q, degs});
        if (degs.size() == 1) {
            cert.kind = IrreducibilityCertificate::Kind::by_prime;
            cert.prime = q;
            return cert;
        }
        const auto sums = degree_subset_sums(degs);
        bool proper = false;
        for (int s = 1; s < n; ++s) {
            feasible[static_cast<std::size_t>(s)] &= sums[static_cast<std::size_t>(s)];
            proper |= feasible[static_cast<std::size_t>(s)] != 0;
        }
        if (!proper) {
            cert.kind = IrreducibilityCertificate::Kind::by_degree_sieve;
            return cert;
        }
    }

    if (n <= kRootSubsetMaxDegree) {
        for (unsigned bits : {96u, 192u, 384u}) {
            IntPolynomial f;
            SubsetResult r = root_subset_search(p, bits, f);
            if (r == SubsetResult::irreducible) {
                cert.kind = IrreducibilityCertificate::Kind::by_root_subsets;
                return cert;
            }
            if (r == SubsetResult::reducible) {
                cert.kind = IrreducibilityCertificate::Kind::reducible;
                cert.reducible_reason = "factor from root subset";
                cert.factor = f;
                return cert;
            }
        }
    }
    cert.kind = IrreducibilityCertificate::Kind::inconclusive;
    return cert;
}

}  // namespace hcert::galois
