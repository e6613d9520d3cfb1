#include "hcert/exact/roots.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cmath>
#include <limits>
#include <complex>
#include <numbers>

namespace hcert::exact {

namespace {

using cld = std::complex<long double>;

// ---------------------------------------------------------------------------
// Starting points from the upper convex hull of (i, log|c_i|).
// ---------------------------------------------------------------------------

long double log_abs(const mpz_class& c)
{
    long e = 0;
    double m = mpz_get_d_2exp(&e, c.get_mpz_t());
    return std::log(std::fabs(static_cast<long double>(m))) + static_cast<long double>(e) * std::numbers::ln2_v<long double>;
}

std::vector<cld> newton_polygon_start(const IntPolynomial& p)
{
    const int d = p.degree();
    std::vector<int> idx;
    std::vector<long double> lg;
    for (int i = 0; i <= d; ++i) {
        const auto& c = p.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        long double v = log_abs(c);
        while (idx.size() >= 2) {
            const std::size_t k = idx.size();
            long double x1 = idx[k - 2], y1 = lg[k - 2], x2 = idx[k - 1], y2 = lg[k - 1];
            // Drop the middle point unless it lies strictly above the chord.
            if ((y2 - y1) * (i - x1) <= (v - y1) * (x2 - x1)) {
                idx.pop_back();
                lg.pop_back();
            } else {
                break;
            }
        }
        idx.push_back(i);
        lg.push_back(v);
    }
    std::vector<cld> z;
    z.reserve(static_cast<std::size_t>(d));
    const long double two_pi = 2 * std::numbers::pi_v<long double>;
    if (idx.front() > 0) {
        // Roots at the origin; p is squarefree so there is at most one.
        for (int k = 0; k < idx.front(); ++k) z.emplace_back(0.0L, 0.0L);
    }
    for (std::size_t e = 0; e + 1 < idx.size(); ++e) {
        const int k = idx[e + 1] - idx[e];
        const long double logr = (lg[e] - lg[e + 1]) / k;
        const long double r = std::exp(std::clamp(logr, -11000.0L, 11000.0L));
        const long double offset = two_pi * idx[e] / d + 0.7L;
        for (int l = 0; l < k; ++l) z.push_back(std::polar(r, two_pi * l / k + offset));
    }
    return z;
}

// ---------------------------------------------------------------------------
// Aberth iteration in long double.
// ---------------------------------------------------------------------------

bool long_double_aberth(const IntPolynomial& p, std::vector<cld>& z)
{
    const int d = p.degree();
    std::vector<long double> c(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        const auto& v = p.coeff(static_cast<std::size_t>(i));
        if (v == 0) continue;
        long e = 0;
        double m = mpz_get_d_2exp(&e, v.get_mpz_t());
        if (std::labs(e) > 16000) return false;
        c[static_cast<std::size_t>(i)] = std::ldexp(static_cast<long double>(m), static_cast<int>(e));
    }
    // Scale to keep the largest coefficient near 1.
    long double cmax = 0;
    for (auto v : c) cmax = std::max(cmax, std::fabs(v));
    for (auto& v : c) v /= cmax;

    auto ratio = [&](cld x) -> cld {
        // p(x) / p'(x), using the reversed polynomial outside the unit disk.
        if (std::abs(x) <= 1) {
            cld pv = c[static_cast<std::size_t>(d)], dv = 0;
            for (int k = d - 1; k >= 0; --k) {
                dv = dv * x + pv;
                pv = pv * x + c[static_cast<std::size_t>(k)];
            }
            if (pv == cld(0)) return 0;
            return pv / dv;
        }
        cld w = 1.0L / x;
        cld rv = c[0], rd = 0;
        for (int k = 1; k <= d; ++k) {
            rd = rd * w + rv;
            rv = rv * w + c[static_cast<std::size_t>(k)];
        }
        if (rv == cld(0)) return 0;
        return 1.0L / (w * (static_cast<long double>(d) - w * rd / rv));
    };

    const long double eps = std::numeric_limits<long double>::epsilon();
    std::vector<char> done(z.size(), 0);
    for (int sweep = 0; sweep < 2000; ++sweep) {
        bool all = true;
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (done[i]) continue;
            cld n = ratio(z[i]);
            cld s = 0;
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != i) s += 1.0L / (z[i] - z[j]);
            cld w = n / (1.0L - n * s);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return false;
            z[i] -= w;
            if (std::abs(w) <= 8 * eps * std::max(std::abs(z[i]), 1e-300L)) done[i] = 1;
            else all = false;
        }
        if (all) return true;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Aberth iteration in MPFR.
// ---------------------------------------------------------------------------

struct MpComplex {
    Real re, im;
    explicit MpComplex(mpfr_prec_t prec) : re(prec), im(prec) {}
};

class MpAberth {
public:
    MpAberth(const IntPolynomial& p, mpfr_prec_t prec) : prec_(prec)
    {
        coeffs_.reserve(p.size());
        for (const auto& c : p.coeffs()) coeffs_.push_back(Real::from(c, prec));
        for (Real* t : {&t1_, &t2_, &t3_, &t4_, &t5_, &t6_, &pr_, &pi_, &dr_, &di_, &nr_, &ni_, &sr_, &si_, &wr_, &wi_})
            *t = Real(prec);
    }

    // One Gauss-Seidel sweep; returns the largest relative correction as log2.
    long sweep(std::vector<MpComplex>& z)
    {
        long worst = std::numeric_limits<long>::min();
        const int d = static_cast<int>(coeffs_.size()) - 1;
        for (std::size_t i = 0; i < z.size(); ++i) {
            const Real& xr = z[i].re;
            const Real& xi = z[i].im;
            // Horner for p and p'.
            mpfr_set(pr_.get(), coeffs_[static_cast<std::size_t>(d)].get(), MPFR_RNDN);
            mpfr_set_zero(pi_.get(), 1);
            mpfr_set_zero(dr_.get(), 1);
            mpfr_set_zero(di_.get(), 1);
            for (int k = d - 1; k >= 0; --k) {
                // d = d*x + p
                mpfr_fmms(t1_.get(), dr_.get(), xr.get(), di_.get(), xi.get(), MPFR_RNDN);
                mpfr_fmma(t2_.get(), dr_.get(), xi.get(), di_.get(), xr.get(), MPFR_RNDN);
                mpfr_add(dr_.get(), t1_.get(), pr_.get(), MPFR_RNDN);
                mpfr_add(di_.get(), t2_.get(), pi_.get(), MPFR_RNDN);
                // p = p*x + c_k
                mpfr_fmms(t1_.get(), pr_.get(), xr.get(), pi_.get(), xi.get(), MPFR_RNDN);
                mpfr_fmma(t2_.get(), pr_.get(), xi.get(), pi_.get(), xr.get(), MPFR_RNDN);
                mpfr_add(pr_.get(), t1_.get(), coeffs_[static_cast<std::size_t>(k)].get(), MPFR_RNDN);
                mpfr_set(pi_.get(), t2_.get(), MPFR_RNDN);
            }
            if (pr_.is_zero() && pi_.is_zero()) continue;
            if (dr_.is_zero() && di_.is_zero()) continue;
            div(nr_, ni_, pr_, pi_, dr_, di_);
            // s = sum 1/(x - z_j)
            mpfr_set_zero(sr_.get(), 1);
            mpfr_set_zero(si_.get(), 1);
            bool clash = false;
            for (std::size_t j = 0; j < z.size(); ++j) {
                if (j == i) continue;
                mpfr_sub(t1_.get(), xr.get(), z[j].re.get(), MPFR_RNDN);
                mpfr_sub(t2_.get(), xi.get(), z[j].im.get(), MPFR_RNDN);
                mpfr_fmma(t3_.get(), t1_.get(), t1_.get(), t2_.get(), t2_.get(), MPFR_RNDN);
                if (t3_.is_zero()) {
                    clash = true;
                    break;
                }
                mpfr_div(t4_.get(), t1_.get(), t3_.get(), MPFR_RNDN);
                mpfr_add(sr_.get(), sr_.get(), t4_.get(), MPFR_RNDN);
                mpfr_div(t4_.get(), t2_.get(), t3_.get(), MPFR_RNDN);
                mpfr_sub(si_.get(), si_.get(), t4_.get(), MPFR_RNDN);
            }
            if (clash) {
                // Nudge coincident approximations apart.
                mpfr_mul_2si(t1_.get(), xr.get(), -static_cast<long>(prec_) / 2, MPFR_RNDN);
                mpfr_add(z[i].im.get(), z[i].im.get(), t1_.get(), MPFR_RNDN);
                mpfr_nextabove(z[i].im.get());
                worst = std::max(worst, 0L);
                continue;
            }
            // w = n / (1 - n s)
            mpfr_fmms(t1_.get(), nr_.get(), sr_.get(), ni_.get(), si_.get(), MPFR_RNDN);
            mpfr_fmma(t2_.get(), nr_.get(), si_.get(), ni_.get(), sr_.get(), MPFR_RNDN);
            mpfr_ui_sub(t1_.get(), 1, t1_.get(), MPFR_RNDN);
            mpfr_neg(t2_.get(), t2_.get(), MPFR_RNDN);
            if (t1_.is_zero() && t2_.is_zero()) continue;
            div(wr_, wi_, nr_, ni_, t1_, t2_);
            mpfr_sub(z[i].re.get(), z[i].re.get(), wr_.get(), MPFR_RNDN);
            mpfr_sub(z[i].im.get(), z[i].im.get(), wi_.get(), MPFR_RNDN);
            // log2 |w| - log2 max(|z|, 1)
            long ew = std::max(wr_.is_zero() ? LONG_MIN / 2 : mpfr_get_exp(wr_.get()),
                               wi_.is_zero() ? LONG_MIN / 2 : mpfr_get_exp(wi_.get()));
            long ez = std::max({z[i].re.is_zero() ? 0L : static_cast<long>(mpfr_get_exp(z[i].re.get())),
                                z[i].im.is_zero() ? 0L : static_cast<long>(mpfr_get_exp(z[i].im.get())), 0L});
            worst = std::max(worst, ew - ez);
        }
        return worst;
    }

private:
    void div(Real& qr, Real& qi, const Real& ar, const Real& ai, const Real& br, const Real& bi)
    {
        mpfr_fmma(t3_.get(), br.get(), br.get(), bi.get(), bi.get(), MPFR_RNDN);
        mpfr_fmma(t5_.get(), ar.get(), br.get(), ai.get(), bi.get(), MPFR_RNDN);
        mpfr_fmms(t6_.get(), ai.get(), br.get(), ar.get(), bi.get(), MPFR_RNDN);
        mpfr_div(qr.get(), t5_.get(), t3_.get(), MPFR_RNDN);
        mpfr_div(qi.get(), t6_.get(), t3_.get(), MPFR_RNDN);
    }

    mpfr_prec_t prec_;
    std::vector<Real> coeffs_;
    Real t1_, t2_, t3_, t4_, t5_, t6_, pr_, pi_, dr_, di_, nr_, ni_, sr_, si_, wr_, wi_;
};

// ---------------------------------------------------------------------------
// Certification: column-Gerschgorin disks of the Weierstrass matrix.
// With W_i = p(z_i) / (lc * prod_{j != i} (z_i - z_j)), every root lies in
// some disk D(z_i - W_i, (n-1)|W_i|) and a union of k disks disjoint from
// the others holds exactly k roots. The balls D(z_i, n|W_i|) contain those
// disks, so their pairwise disjointness isolates one root per ball.
// ---------------------------------------------------------------------------

std::vector<ComplexBall> weierstrass_balls(const IntPolynomial& p, const std::vector<MpComplex>& z, mpfr_prec_t prec,
                                           bool& ok)
{
    const std::size_t n = z.size();
    std::vector<ComplexBall> mids;
    mids.reserve(n);
    Real zero_rad(kRadiusPrec);
    for (const auto& v : z) mids.emplace_back(v.re, v.im, zero_rad);
    const ComplexBall lc = ComplexBall::exact(p.leading(), prec);
    std::vector<ComplexBall> out;
    out.reserve(n);
    ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        ComplexBall num = evaluate(p, mids[i]);
        ComplexBall den = lc;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) den = den * (mids[i] - mids[j]);
        if (den.contains_zero()) {
            ok = false;
            return {};
        }
        ComplexBall w = num / den;
        Real r = w.abs_upper();
        mpfr_mul_ui(r.get(), r.get(), static_cast<unsigned long>(n), MPFR_RNDU);
        out.emplace_back(z[i].re, z[i].im, r);
    }
    for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (out[i].overlaps(out[j])) {
                ok = false;
                break;
            }
    return out;
}

bool radii_within(const std::vector<ComplexBall>& balls, unsigned bits)
{
    Real bound(kRadiusPrec);
    mpfr_set_ui_2exp(bound.get(), 1, -static_cast<long>(bits), MPFR_RNDD);
    return std::all_of(balls.begin(), balls.end(), [&](const ComplexBall& b) { return b.rad() <= bound; });
}

void snap_real(std::vector<MpComplex>& z, mpfr_prec_t prec)
{
    // Midpoints within 2^(-prec/2) relative distance of the real axis are
    // assumed to approximate real roots; certification decides.
    Real tol(kRadiusPrec), a(kRadiusPrec);
    for (auto& v : z) {
        mpfr_abs(a.get(), v.re.get(), MPFR_RNDU);
        if (mpfr_cmp_ui(a.get(), 1) < 0) mpfr_set_ui(a.get(), 1, MPFR_RNDU);
        mpfr_mul_2si(tol.get(), a.get(), -static_cast<long>(prec) / 2, MPFR_RNDU);
        mpfr_abs(a.get(), v.im.get(), MPFR_RNDU);
        if (a <= tol) mpfr_set_zero(v.im.get(), 1);
    }
}

std::vector<MpComplex> to_mp(const std::vector<cld>& z, mpfr_prec_t prec)
{
    std::vector<MpComplex> out;
    out.reserve(z.size());
    for (const auto& v : z) {
        MpComplex m(prec);
        mpfr_set_ld(m.re.get(), v.real(), MPFR_RNDN);
        mpfr_set_ld(m.im.get(), v.imag(), MPFR_RNDN);
        out.push_back(std::move(m));
    }
    return out;
}

void raise_precision(std::vector<MpComplex>& z, mpfr_prec_t prec)
{
    for (auto& v : z) {
        mpfr_prec_round(v.re.get(), prec, MPFR_RNDN);
        mpfr_prec_round(v.im.get(), prec, MPFR_RNDN);
    }
}

std::vector<ComplexBall> certify_from(const IntPolynomial& q, std::vector<MpComplex> z, const RootIsolationOptions& opts)
{
    const mpfr_prec_t base = static_cast<mpfr_prec_t>(opts.precision_bits) + 64 +
                             static_cast<mpfr_prec_t>(2 * std::bit_width(static_cast<unsigned>(q.degree())));
    mpfr_prec_t prec = std::max<mpfr_prec_t>(base, 96);
    while (prec <= opts.max_working_prec) {
        raise_precision(z, prec);
        MpAberth aberth(q, prec);
        long last = std::numeric_limits<long>::max();
        for (int it = 0; it < 60; ++it) {
            long worst = aberth.sweep(z);
            if (worst <= -static_cast<long>(prec) + 8) break;
            if (it > 8 && worst >= last) break;
            last = worst;
        }
        for (int attempt = 0; attempt < 2; ++attempt) {
            std::vector<MpComplex> trial = z;
            if (attempt == 0) snap_real(trial, prec);
            bool ok = false;
            auto balls = weierstrass_balls(q, trial, prec, ok);
            if (ok && radii_within(balls, opts.precision_bits)) return balls;
        }
        prec *= 2;
    }
    throw ResourceError("root isolation exceeded the working precision limit");
}

}  // namespace

std::vector<ComplexBall> isolate_roots(const IntPolynomial& p, const RootIsolationOptions& opts)
{
    if (p.is_zero()) throw std::domain_error("zero polynomial");
    const IntPolynomial q = squarefree_part(p);
    if (q.degree() <= 0) return {};

    std::vector<cld> start = newton_polygon_start(q);
    std::vector<MpComplex> z;
    if (long_double_aberth(q, start)) {
        z = to_mp(start, 64);
    } else {
        z = to_mp(newton_polygon_start(q), 64);
    }
    return certify_from(q, std::move(z), opts);
}

std::vector<ComplexBall> refine_roots(const IntPolynomial& p, const std::vector<ComplexBall>& roots,
                                      const RootIsolationOptions& opts)
{
    if (p.is_zero()) throw std::domain_error("zero polynomial");
    if (static_cast<int>(roots.size()) != p.degree()) throw std::invalid_argument("root count does not match degree");
    std::vector<MpComplex> z;
    for (const auto& b : roots) {
        MpComplex m(b.prec());
        mpfr_set(m.re.get(), b.re().get(), MPFR_RNDN);
        mpfr_set(m.im.get(), b.im().get(), MPFR_RNDN);
        z.push_back(std::move(m));
    }
    return certify_from(p, std::move(z), opts);
}

std::size_t count_real(const std::vector<ComplexBall>& roots)
{
    return static_cast<std::size_t>(
        std::count_if(roots.begin(), roots.end(), [](const ComplexBall& b) { return b.im().is_zero(); }));
}

}  // namespace hcert::exact
