#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hcert/elliptic/curve.hpp"
#include "hcert/heights/algebraic.hpp"
#include "hcert/heights/neron_tate.hpp"
#include "hcert/heights/weil.hpp"

#include <cmath>
#include <complex>
#include <random>

using namespace hcert;
using exact::IntPolynomial;
using heights::AlgebraicNumber;
using heights::HeightValue;

namespace {

// Double-precision Durand-Kerner Mahler measure, independent of the ball code.
double mahler_oracle(const IntPolynomial& p)
{
    const int n = p.degree();
    const double lc = p.leading().get_d();
    std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = std::pow(std::complex<double>(0.4, 0.9), i);
    auto eval = [&](std::complex<double> x) {
        std::complex<double> acc = 0;
        for (int i = n; i >= 0; --i) acc = acc * x + p.coeff(static_cast<std::size_t>(i)).get_d();
        return acc / lc;
    };
    for (int it = 0; it < 2000; ++it) {
        for (int i = 0; i < n; ++i) {
            std::complex<double> den = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) den *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
            z[static_cast<std::size_t>(i)] -= eval(z[static_cast<std::size_t>(i)]) / den;
        }
    }
    double m = std::log(std::fabs(lc));
    for (const auto& r : z) m += std::max(0.0, std::log(std::abs(r)));
    return m;
}

bool within(const HeightValue& h, double v, double tol) { return std::fabs(h.mid_double() - v) <= h.err_double() + tol; }

// |a - b| <= err(a) + err(b), decided on the enclosures.
bool overlaps(const HeightValue& a, const HeightValue& b)
{
    return a.lower() <= b.upper() && b.lower() <= a.upper();
}

AlgebraicNumber random_algebraic(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> deg(1, 6), coef(-6, 6);
    for (;;) {
        const int d = deg(rng);
        std::vector<mpz_class> c(static_cast<std::size_t>(d) + 1);
        for (auto& x : c) x = coef(rng);
        if (c.back() == 0) c.back() = 1;
        if (c.front() == 0) c.front() = -1;
        IntPolynomial p(c);
        p = p.primitive_part();
        auto a = AlgebraicNumber::from_root_index(p, 0);
        if (a.verified()) return a;
    }
}

}  // namespace

TEST_CASE("HeightValue enclosures and arithmetic")
{
    const HeightValue z = HeightValue::exact_zero();
    CHECK(z.contains_zero());
    CHECK_FALSE(z.certainly_positive());

    const HeightValue b = heights::gm_small_point_bound(2);
    CHECK(within(b, std::log(2.0), 1e-15));
    const HeightValue s = b + b;
    CHECK(within(s, 2 * std::log(2.0), 1e-15));
    CHECK(within(s - b, std::log(2.0), 1e-15));
    CHECK(within(b.scale(3, 4), 0.75 * std::log(2.0), 1e-15));
    CHECK(b.certainly_le(s));
    CHECK(b.to_json().find("\"err\"") < b.to_json().find("\"mid\""));
    CHECK_THROWS_AS(b.scale(1, 0), std::invalid_argument);

    // The printed midpoint plus the printed radius still encloses the value
    // (up to the double conversion of the printed strings).
    const double mid = std::stod(b.mid_string(8));
    const double err = std::stod(b.err_string(8));
    CHECK(std::fabs(mid - std::log(2.0)) <= err + 1e-15);
    CHECK(err < 1e-8);
}

TEST_CASE("gm small point bound")
{
    CHECK(within(heights::gm_small_point_bound(5), 0.17328679513998632, 1e-15));
    CHECK(within(heights::gm_small_point_bound(101), 0.0069314718055994531, 1e-15));
    CHECK_THROWS(heights::gm_small_point_bound(1));
}

TEST_CASE("Weil height examples")
{
    CHECK(within(heights::weil_height(AlgebraicNumber::rational(2)), std::log(2.0), 1e-15));
    CHECK(within(heights::weil_height(AlgebraicNumber::rational(-3, 7)), std::log(7.0), 1e-15));
    CHECK(within(heights::weil_height(AlgebraicNumber::from_root_index({-1, -1, 1}, 0)), 0.5 * std::log((1 + std::sqrt(5.0)) / 2),
                 1e-15));
    CHECK(within(heights::weil_height(AlgebraicNumber::from_root_index({-2, 0, 1}, 1)), 0.5 * std::log(2.0), 1e-15));
    // Roots of unity: cyclotomic polynomials give height zero.
    for (const IntPolynomial& phi : {IntPolynomial{1, 1, 1, 1, 1}, IntPolynomial{1, 0, -1, 0, 1}, IntPolynomial{1, -1, 1}}) {
        const auto a = AlgebraicNumber::from_root_index(phi, 0);
        REQUIRE(a.verified());
        CHECK(heights::weil_height(a).contains_zero());
    }
    // Every conjugate gives the same height.
    const IntPolynomial f{-1, -1, 0, 0, 0, 1};
    const auto h0 = heights::weil_height(AlgebraicNumber::from_root_index(f, 0));
    for (std::size_t i = 1; i < 5; ++i) CHECK(overlaps(h0, heights::weil_height(AlgebraicNumber::from_root_index(f, i))));

    AlgebraicNumber unverified = AlgebraicNumber::from_root_index({-1, 0, 1}, 0);
    CHECK_FALSE(unverified.verified());
    CHECK_THROWS_WITH(heights::weil_height(unverified), "height requires minimal polynomial");
}

TEST_CASE("Weil height matches a floating-point Mahler measure")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 60; ++i) {
        const auto a = random_algebraic(rng);
        const double oracle = mahler_oracle(a.min_poly) / a.degree();
        CHECK(within(heights::weil_height(a), oracle, 1e-9));
    }
}

TEST_CASE("power polynomial against resultant-free expansion")
{
    // Roots of X^2 - 2 squared: X - 2 twice, primitive part (X - 2)^2.
    CHECK(heights::power_polynomial({-2, 0, 1}, 2) == IntPolynomial({4, -4, 1}));
    // Roots of X^2 - X - 1 cubed: phi^3 + psi^3 = 4, phi^3 psi^3 = -1.
    CHECK(heights::power_polynomial({-1, -1, 1}, 3) == IntPolynomial({-1, -4, 1}));
    CHECK_THROWS(heights::power_polynomial({-1, 1}, 0));
}

TEST_CASE("Weil height functional equations on random algebraic numbers")
{
    std::mt19937_64 rng(2024);
    const HeightValue log2 = heights::gm_small_point_bound(2);
    for (int i = 0; i < 40; ++i) {
        const auto a = random_algebraic(rng);
        const HeightValue h = heights::weil_height(a);
        for (unsigned k = 1; k <= 3; ++k) {
            const auto ak = heights::power(a, k);
            if (!ak.verified()) continue;
            // deg(alpha^k) may drop; h(alpha^k) = k h(alpha) regardless.
            CHECK(overlaps(heights::weil_height(ak), h.scale(static_cast<long>(k))));
        }
        CHECK(overlaps(heights::weil_height(heights::inverse(a)), h));
        CHECK(overlaps(heights::weil_height(heights::negate(a)), h));
        const HeightValue h1 = heights::weil_height(heights::shift(a, 1));
        CHECK(h1.lower() <= (h + log2).upper());
    }
}

TEST_CASE("Neron-Tate height: torsion points")
{
    using elliptic::CurveQ;
    using elliptic::RationalPoint;
    const CurveQ e1(-1, 0), e2(0, 1);
    for (const auto& [e, x, y] : {std::tuple{e1, 0, 0}, std::tuple{e1, 1, 0}, std::tuple{e1, -1, 0}, std::tuple{e2, -1, 0},
                                  std::tuple{e2, 0, 1}, std::tuple{e2, 2, 3}, std::tuple{e2, 2, -3}}) {
        const auto p = RationalPoint::affine(x, y);
        REQUIRE(elliptic::on_curve(e, p));
        REQUIRE(elliptic::torsion_order(e, p).has_value());
        CHECK(heights::neron_tate_height(e, p).contains_zero());
    }
    CHECK(heights::neron_tate_height(e1, RationalPoint::affine(0, 0)).err().is_zero());
    CHECK_THROWS(heights::neron_tate_height(e1, RationalPoint::affine(1, 1)));
    CHECK_THROWS(heights::neron_tate_height(e1, RationalPoint::at_infinity()));
}

TEST_CASE("Neron-Tate height against naive doubling through the group law")
{
    const elliptic::CurveQ e(0, -2);
    const auto p = elliptic::RationalPoint::affine(3, 5);
    heights::NTConfig cfg;
    cfg.doubling_steps = 6;
    const HeightValue h = heights::neron_tate_height(e, p, cfg);

    // 4^-6 h(x([64]P)) computed with the generic doubling formula.
    auto q = p;
    for (int i = 0; i < 6; ++i) q = elliptic::dbl(e, q);
    const auto hx = heights::log_height(q.x);
    const double naive = hx.lo().to_double() / 4096.0;
    CHECK(std::fabs(h.mid_double() - naive) <= h.err_double() + 1e-12);
    CHECK(h.certainly_positive());
}

TEST_CASE("Neron-Tate height: quadraticity and the comparison constant")
{
    const elliptic::CurveQ e(0, -2);
    const auto p = elliptic::RationalPoint::affine(3, 5);
    const auto cc = heights::height_compare_constant(e);
    CHECK(cc.c.certainly_positive());
    heights::NTConfig cfg;
    cfg.doubling_steps = 4;
    cfg.c_e = cc.c_e;
    for (long k = 1; k <= 12; ++k) {
        const auto pk = elliptic::multiply(e, p, k);
        const HeightValue h = heights::neron_tate_height(e, pk, cfg);
        const HeightValue h2 = heights::neron_tate_height(e, elliptic::dbl(e, pk), cfg);
        CHECK(overlaps(h2, h.scale(4)));
        const HeightValue hk2 = heights::neron_tate_height(e, p, cfg).scale(k * k);
        CHECK(overlaps(h, hk2));
        // |h_hat - h(x)| <= c.
        const auto hx = HeightValue::from_interval(heights::log_height(pk.x));
        CHECK((h - hx).upper() <= cc.c.upper());
        CHECK((hx - h).upper() <= cc.c.upper());
    }
}

TEST_CASE("comparison constant is deterministic and consistent across depths")
{
    const elliptic::CurveQ e(0, 1);
    const auto a = heights::height_compare_constant(e);
    const auto b = heights::height_compare_constant(e);
    CHECK(a.c.mid_string() == b.c.mid_string());
    CHECK(a.c.err_string() == b.c.err_string());
    CHECK(a.c_e.mid_double() == doctest::Approx(3 * a.c.mid_double()));

    const elliptic::CurveQ e2(0, -2);
    const auto p = elliptic::RationalPoint::affine(3, 5);
    heights::NTConfig c4, c8;
    c4.doubling_steps = 4;
    c8.doubling_steps = 8;
    const auto h4 = heights::neron_tate_height(e2, p, c4);
    const auto h8 = heights::neron_tate_height(e2, p, c8);
    const double tail = heights::height_compare_constant(e2).c.mid_double() / 256.0;
    CHECK(std::fabs(h4.mid_double() - h8.mid_double()) <= tail + h8.err_double() + 1e-12);
}

TEST_CASE("adaptive doubling meets the requested tolerance")
{
    const elliptic::CurveQ e(0, -2);
    heights::NTConfig cfg;
    cfg.doubling_steps = 2;
    cfg.tolerance = 1e-4;
    const auto h = heights::neron_tate_height(e, elliptic::RationalPoint::affine(3, 5), cfg);
    CHECK(h.err_double() <= 1e-4);
}
