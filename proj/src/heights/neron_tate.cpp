#include "hcert/heights/neron_tate.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

namespace hcert::heights {

using namespace elliptic;

namespace {

constexpr mpfr_prec_t kPrec = 128;

// Coefficients of X^j Z^(deg-j), j ascending.
using Form = std::vector<mpz_class>;

mpz_class l1(const Form& f)
{
    mpz_class s = 0;
    for (const auto& c : f) s += abs(c);
    return s;
}

// Solves f F + g G = e_target (a monomial of degree 7) for cubic forms f, g
// over Q by Gaussian elimination on the 8x8 Sylvester-type system.
std::array<std::vector<mpq_class>, 2> solve_cubics(const Form& F, const Form& G, int target_j)
{
    constexpr int N = 8;
    std::vector<std::vector<mpq_class>> m(N, std::vector<mpq_class>(N + 1));
    // Unknowns 0..3: f_i (X^i Z^(3-i)); 4..7: g_i.
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j <= 4; ++j) {
            m[static_cast<std::size_t>(i + j)][static_cast<std::size_t>(i)] += F[static_cast<std::size_t>(j)];
            m[static_cast<std::size_t>(i + j)][static_cast<std::size_t>(4 + i)] += G[static_cast<std::size_t>(j)];
        }
    m[static_cast<std::size_t>(target_j)][N] = 1;
    for (int col = 0; col < N; ++col) {
        int piv = col;
        while (piv < N && m[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)] == 0) ++piv;
        if (piv == N) throw std::domain_error("duplication polynomials share a factor");
        std::swap(m[static_cast<std::size_t>(col)], m[static_cast<std::size_t>(piv)]);
        for (int r = 0; r < N; ++r) {
            if (r == col) continue;
            mpq_class factor = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /
                               m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
            if (factor == 0) continue;
            for (int c = col; c <= N; ++c)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    factor * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
        }
    }
    std::array<std::vector<mpq_class>, 2> out{std::vector<mpq_class>(4), std::vector<mpq_class>(4)};
    for (int i = 0; i < N; ++i) {
        mpq_class v = m[static_cast<std::size_t>(i)][N] / m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        out[static_cast<std::size_t>(i / 4)][static_cast<std::size_t>(i % 4)] = v;
    }
    return out;
}

}  // namespace

CompareConstant height_compare_constant(const CurveQ& e)
{
    const mpz_class& a = e.a4();
    const mpz_class& b = e.a6();
    const Form F{a * a, -8 * b, -2 * a, 0, 1};
    const Form G{4 * b, 4 * a, 0, 4, 0};

    const auto sx = solve_cubics(F, G, 7);
    const auto sz = solve_cubics(F, G, 0);
    mpz_class d = 1;
    for (const auto* sol : {&sx, &sz})
        for (const auto& part : *sol)
            for (const auto& v : part) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den_mpz_t());
    auto scaled_l1 = [&](const std::array<std::vector<mpq_class>, 2>& sol) {
        mpz_class s = 0;
        for (const auto& part : sol)
            for (const auto& v : part) {
                mpq_class w = v * d;
                s += abs(w.get_num());
            }
        return s;
    };

    CompareConstant out;
    out.upper_l1 = std::max(l1(F), l1(G));
    out.lower_l1 = std::max(scaled_l1(sx), scaled_l1(sz));
    out.elimination_d = d;
    out.model = e.to_string();
    const Interval ce = Interval::log_abs(std::max(out.upper_l1, out.lower_l1), kPrec);
    out.c_e = HeightValue::from_interval(ce);
    out.c = HeightValue::from_interval(ce.div_si(3));
    return out;
}

Interval log_height(const mpq_class& x, mpfr_prec_t prec)
{
    const mpz_class& n = x.get_num();
    const mpz_class& d = x.get_den();
    mpz_class m = std::max<mpz_class>(abs(n), abs(d));
    return Interval::log_abs(m, prec);
}

HeightValue neron_tate_height(const CurveQ& e, const RationalPoint& p, const NTConfig& cfg)
{
    if (p.infinity) throw std::domain_error("height of the point at infinity");
    if (!on_curve(e, p)) throw std::domain_error("point not on curve");
    if (cfg.doubling_steps == 0) throw std::invalid_argument("doubling_steps must be positive");
    const HeightValue ce = cfg.c_e ? *cfg.c_e : height_compare_constant(e).c_e;
    const Interval ce_iv = ce.interval();

    mpq_class x = p.x;
    unsigned done = 0;
    auto advance_to = [&](unsigned k) {
        while (done < k) {
            auto nx = double_x(e, x);
            if (!nx) return false;
            x = *nx;
            ++done;
        }
        return true;
    };

    unsigned k = cfg.doubling_steps;
    while (true) {
        if (!advance_to(k)) return HeightValue::exact_zero(kPrec);
        // 4^-k h(x) +/- 4^-k C_E / 3
        Interval h = log_height(x, kPrec);
        Real tail_hi(kPrec);
        mpfr_div_ui(tail_hi.get(), ce_iv.hi().get(), 3, MPFR_RNDU);
        mpfr_mul_2si(tail_hi.get(), tail_hi.get(), -2 * static_cast<long>(k), MPFR_RNDU);
        Real lo(kPrec), hi(kPrec);
        mpfr_mul_2si(lo.get(), h.lo().get(), -2 * static_cast<long>(k), MPFR_RNDD);
        mpfr_mul_2si(hi.get(), h.hi().get(), -2 * static_cast<long>(k), MPFR_RNDU);
        Interval est(lo, hi);
        HeightValue v = HeightValue::from_interval(est.widen(tail_hi));
        if (cfg.tolerance <= 0 || v.err_double() <= cfg.tolerance || k >= cfg.max_steps) return v;
        ++k;
    }
}

}  // namespace hcert::heights
