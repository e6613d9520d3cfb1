#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hcert/exact/ball.hpp"
#include "hcert/exact/bi_poly.hpp"
#include "hcert/exact/finite_field.hpp"
#include "hcert/exact/mod_poly.hpp"
#include "hcert/exact/poly_text.hpp"
#include "hcert/exact/resultant.hpp"
#include "hcert/exact/roots.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"

using namespace hcert::exact;
using oracle::brute_factor_degrees;
using oracle::random_poly;
using oracle::sylvester_resultant;

namespace {

double approx(const Real& r) { return r.to_double(); }

}  // namespace

TEST_CASE("polynomial ring arithmetic is exact")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        IntPolynomial p = random_poly(rng, 12, 1000);
        IntPolynomial q = random_poly(rng, 12, 1000);
        CHECK((p + q) - q == p);
        CHECK(p * q == q * p);
    }
}

TEST_CASE("kronecker multiplication matches schoolbook on long inputs")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<mpz_class> a(40), b(35);
        std::uniform_int_distribution<long> c(-1000000007L, 1000000007L);
        for (auto& x : a) x = mpz_class(c(rng)) * mpz_class(c(rng)) * (trial % 3 == 0 ? mpz_class(c(rng)) : mpz_class(1));
        for (auto& x : b) x = c(rng);
        IntPolynomial pa(a), pb(b);
        std::vector<mpz_class> ref(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) ref[i + j] += a[i] * b[j];
        CHECK(pa * pb == IntPolynomial(ref));
    }
}

TEST_CASE("division, gcd and shifts")
{
    IntPolynomial x2m1{-1, 0, 1};
    IntPolynomial xm1{-1, 1};
    CHECK(exact_quotient(x2m1, xm1) == IntPolynomial{1, 1});
    CHECK_THROWS_AS(exact_quotient(x2m1, IntPolynomial{1, 2}), std::domain_error);
    CHECK(gcd(x2m1 * IntPolynomial{3, 1}, IntPolynomial{-1, 1} * IntPolynomial{5, 1, 1}) == xm1);
    CHECK(taylor_shift(IntPolynomial{0, 0, 1}, 1) == IntPolynomial{1, 2, 1});
    CHECK(reverse(IntPolynomial{1, 2, 3}) == IntPolynomial{3, 2, 1});
    CHECK(negate_variable(IntPolynomial{1, 2, 3}) == IntPolynomial{1, -2, 3});
    CHECK(squarefree_part(IntPolynomial{-1, 1} * IntPolynomial{-1, 1} * IntPolynomial{2, 1}) == IntPolynomial{-2, 1, 1});
    CHECK(has_repeated_root(power(IntPolynomial{1, 1}, 2)));
    CHECK_FALSE(has_repeated_root(IntPolynomial{-1, -1, 0, 0, 0, 1}));

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        IntPolynomial a = random_poly(rng, 8, 30), b = random_poly(rng, 5, 30);
        if (b.degree() < 1) continue;
        IntPolynomial r = pseudo_remainder(a, b);
        CHECK(r.degree() < b.degree());
        // lc(b)^(da-db+1) a - r is divisible by b.
        if (a.degree() >= b.degree()) {
            mpz_class f;
            mpz_pow_ui(f.get_mpz_t(), b.leading().get_mpz_t(), static_cast<unsigned long>(a.degree() - b.degree() + 1));
            IntPolynomial lhs = a * f - r;
            auto [q, rem] = divide_integral(lhs * b.leading() * b.leading(), b);
            CHECK(rem.is_zero());
        }
    }
}

TEST_CASE("resultant examples")
{
    CHECK(resultant(IntPolynomial{-1, 1}, IntPolynomial{-2, 1}) == -1);
    CHECK(resultant(IntPolynomial{1, 0, 1}, IntPolynomial{0, 1}) == 1);
    CHECK_THROWS_WITH_AS(resultant(IntPolynomial{}, IntPolynomial{1, 1}), "zero polynomial", std::domain_error);
    CHECK(resultant(IntPolynomial{-1, 1} * IntPolynomial{2, 1}, IntPolynomial{-1, 1}) == 0);
}

TEST_CASE("resultant agrees with the Sylvester determinant")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        IntPolynomial p = random_poly(rng, 7, 20), q = random_poly(rng, 7, 20);
        if (trial % 5 == 0) q = q * IntPolynomial{3, 6};  // non-primitive
        CHECK(resultant(p, q) == sylvester_resultant(p, q));
    }
}

TEST_CASE("discriminant examples against closed-form oracles")
{
    // b^2 - 4ac
    CHECK(discriminant(IntPolynomial{-1, -1, 1}) == 5);
    // -4p^3 - 27q^2 for X^3 + pX + q
    auto cubic = [](long p, long q) { return -4 * p * p * p - 27 * q * q; };
    CHECK(discriminant(IntPolynomial{-1, -1, 0, 1}) == cubic(-1, -1));
    CHECK(discriminant(IntPolynomial{-1, -1, 0, 1}) == -23);
    // -27 p^4 + 256 q^3 for X^4 + pX + q
    CHECK(discriminant(IntPolynomial{-1, -1, 0, 0, 1}) == -27 + 256 * (-1));
    CHECK(discriminant(IntPolynomial{-1, -1, 0, 0, 1}) == -283);
    CHECK_THROWS_AS(discriminant(IntPolynomial{7}), std::domain_error);

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        long p = static_cast<long>(rng() % 41) - 20, q = static_cast<long>(rng() % 41) - 20;
        CHECK(discriminant(IntPolynomial{q, p, 0, 1}) == cubic(p, q));
    }
}

TEST_CASE("factor degrees modulo primes")
{
    auto fd = [](const IntPolynomial& p, u64 q) { return factor_degrees_mod_p(ModPolynomial::reduce(p, q)); };
    CHECK(fd(IntPolynomial{1, 0, 1}, 5) == std::vector<int>{1, 1});
    CHECK(fd(IntPolynomial{1, 0, 1}, 3) == std::vector<int>{2});
    CHECK(fd(IntPolynomial{-1, -1, 0, 0, 0, 1}, 2) == std::vector<int>{2, 3});
    CHECK(fd(IntPolynomial{-1, -1, 0, 0, 0, 1}, 3) == std::vector<int>{5});
    CHECK_THROWS_WITH_AS(fd(IntPolynomial{1, 2, 1}, 7), "ramified prime", std::domain_error);
    CHECK_THROWS_AS(fd(IntPolynomial{1, 0, 1}, 9), std::invalid_argument);
}

TEST_CASE("distinct-degree factorization agrees with exhaustive factorization")
{
    std::mt19937_64 rng(21);
    int compared = 0;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        for (int trial = 0; trial < 60; ++trial) {
            std::uniform_int_distribution<int> deg(1, 6);
            int d = deg(rng);
            std::vector<u64> c(static_cast<std::size_t>(d) + 1);
            for (auto& x : c) x = rng() % p;
            c.back() = 1 + rng() % (p - 1);
            ModPolynomial mp(p, c);
            if (!mp.is_squarefree()) {
                CHECK_THROWS(factor_degrees_mod_p(mp));
                continue;
            }
            auto got = factor_degrees_mod_p(mp);
            int sum = 0;
            for (int g : got) sum += g;
            CHECK(sum == d);
            CHECK(got == brute_factor_degrees(c, p));
            ++compared;
        }
    }
    CHECK(compared > 200);
}

TEST_CASE("extension field arithmetic")
{
    ExtensionField f(3, 2);
    CHECK(f.order() == 9);
    for (u64 a = 1; a < 9; ++a) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.add(a, f.neg(a)) == 0);
        CHECK(f.pow(a, 8) == 1);
    }
    // Distributivity over the whole field.
    for (u64 a = 0; a < 9; ++a)
        for (u64 b = 0; b < 9; ++b)
            for (u64 c = 0; c < 9; ++c) CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    // X^2 + 1 is irreducible over F_3 but splits over F_9.
    CHECK(fpoly::is_irreducible(PrimeField(3), {1, 0, 1}));
    CHECK_FALSE(fpoly::is_irreducible(f, {1, 0, 1}));
}

TEST_CASE("bivariate polynomials")
{
    // X^2 - T^2 = (X - T)(X + T)
    BiPolynomial x = BiPolynomial::monomial(1, 0, 1), t = BiPolynomial::monomial(1, 1, 0);
    BiPolynomial lhs = x * x - t * t;
    CHECK(lhs == (x - t) * (x + t));
    CHECK(lhs.degree_x() == 2);
    CHECK(lhs.degree_t() == 2);
    CHECK(lhs.specialize_t(3) == IntPolynomial{-9, 0, 1});
    CHECK(congruent_mod(lhs + BiPolynomial::monomial(7, 1, 1), lhs, 7));
    CHECK(parse_bi_poly(format_bi_poly(lhs)) == lhs);
}

TEST_CASE("polynomial text format")
{
    CHECK(parse_int_poly("[ -1, -1, 0, 0, 0, 1 ]") == IntPolynomial{-1, -1, 0, 0, 0, 1});
    CHECK(parse_int_poly("[\"123456789012345678901234567890\", 1]").coeff(0) ==
          mpz_class("123456789012345678901234567890"));
    CHECK(format_int_poly(IntPolynomial{-1, 0, 2}) == "[\"-1\",\"0\",\"2\"]");
    CHECK_THROWS_AS(parse_int_poly("[1, x]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int_poly("[1, 2"), std::invalid_argument);
}

TEST_CASE("ball arithmetic encloses exact results")
{
    const mpfr_prec_t prec = 64;
    ComplexBall third = ComplexBall::exact(1, prec) / ComplexBall::exact(3, prec);
    ComplexBall back = third * ComplexBall::exact(3, prec) - ComplexBall::exact(1, prec);
    CHECK(back.contains_zero());
    CHECK(approx(third.rad()) < 1e-18);
    ComplexBall big = ComplexBall::exact(mpz_class("123456789012345678901234567890"), prec);
    CHECK(big.rad().sign() > 0);
    CHECK_THROWS_AS(ComplexBall::exact(1, prec) / ComplexBall(prec), std::domain_error);
}

TEST_CASE("root isolation examples")
{
    auto roots = isolate_roots(IntPolynomial{-2, 0, 1}, 80);
    REQUIRE(roots.size() == 2);
    std::vector<double> re;
    for (const auto& b : roots) {
        re.push_back(approx(b.re()));
        CHECK(approx(b.rad()) <= std::ldexp(1.0, -80));
    }
    std::sort(re.begin(), re.end());
    CHECK(re[0] == doctest::Approx(-std::sqrt(2.0)));
    CHECK(re[1] == doctest::Approx(std::sqrt(2.0)));
    CHECK_FALSE(roots[0].overlaps(roots[1]));
    CHECK(count_real(roots) == 2);

    // Quadratic-formula oracle for X^2 - X - 1.
    auto golden = isolate_roots(IntPolynomial{-1, -1, 1}, 100);
    REQUIRE(golden.size() == 2);
    const double phi = (1 + std::sqrt(5.0)) / 2;
    std::vector<double> g{approx(golden[0].re()), approx(golden[1].re())};
    std::sort(g.begin(), g.end());
    CHECK(g[0] == doctest::Approx(1 - phi).epsilon(1e-14));
    CHECK(g[1] == doctest::Approx(phi).epsilon(1e-14));

    for (int n : {1, 2, 5, 12, 31}) {
        auto unity = isolate_roots(IntPolynomial::monomial(1, static_cast<std::size_t>(n)) - IntPolynomial{1}, 64);
        REQUIRE(unity.size() == static_cast<std::size_t>(n));
        for (const auto& b : unity) {
            Interval a = b.abs();
            CHECK(a.lo() <= Real::from(1L));
            CHECK(a.hi() >= Real::from(1L));
        }
        for (std::size_t i = 0; i < unity.size(); ++i)
            for (std::size_t j = i + 1; j < unity.size(); ++j) CHECK_FALSE(unity[i].overlaps(unity[j]));
    }
    CHECK_THROWS_AS(isolate_roots(IntPolynomial{}, 64), std::domain_error);
    // Repeated roots are deflated first.
    CHECK(isolate_roots(power(IntPolynomial{-3, 1}, 3) * IntPolynomial{1, 0, 1}, 64).size() == 3);
}

TEST_CASE("resultant equals the product of q over enclosed roots of p")
{
    std::mt19937_64 rng(17);
    int done = 0;
    while (done < 40) {
        IntPolynomial p = random_poly(rng, 8, 50), q = random_poly(rng, 8, 50);
        if (p.degree() < 1 || q.degree() < 0 || has_repeated_root(p)) continue;
        auto roots = isolate_roots(p, 100);
        REQUIRE(static_cast<int>(roots.size()) == p.degree());
        ComplexBall prod = ComplexBall::exact(p.leading(), 200).pow(static_cast<unsigned long>(q.degree()));
        for (const auto& r : roots) {
            ComplexBall z(Real(r.re()), Real(r.im()), Real(r.rad()));
            prod = prod * evaluate(q, z);
        }
        ComplexBall diff = prod - ComplexBall::exact(resultant(p, q), 200);
        CHECK(diff.contains_zero());
        CHECK(approx(diff.rad()) < 1e-6 * std::max(1.0, std::fabs(resultant(p, q).get_d())));
        ++done;
    }
}

TEST_CASE("root balls cover all roots and respect the Mahler bounds")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        IntPolynomial p = random_poly(rng, 10, 100);
        if (p.degree() < 1 || has_repeated_root(p)) continue;
        auto roots = isolate_roots(p, 64);
        REQUIRE(static_cast<int>(roots.size()) == p.degree());
        // Cauchy bound: every root has |z| < 1 + max |c_i / c_d|.
        mpz_class m = 0;
        for (int i = 0; i < p.degree(); ++i) m = std::max<mpz_class>(m, abs(p.coeff(static_cast<std::size_t>(i))));
        const double cauchy = 1 + m.get_d() / std::fabs(p.leading().get_d());
        double mahler = std::fabs(p.leading().get_d());
        for (const auto& r : roots) {
            CHECK(approx(r.abs_lower()) < cauchy);
            mahler *= std::max(1.0, approx(r.abs_upper()));
        }
        // Landau: M(p) <= ||p||_2.
        double l2 = 0;
        for (const auto& c : p.coeffs()) l2 += c.get_d() * c.get_d();
        CHECK(mahler <= std::sqrt(l2) * (1 + 1e-9));
    }
}
