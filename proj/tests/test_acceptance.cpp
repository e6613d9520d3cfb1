// Acceptance harness: one PASS/FAIL line per criterion, exit status 1 when
// any criterion fails.

#include "hcert/cli/run.hpp"
#include "hcert/elliptic/aux_poly.hpp"
#include "hcert/elliptic/certificate.hpp"
#include "hcert/elliptic/curve.hpp"
#include "hcert/elliptic/reduction.hpp"
#include "hcert/exact/mod_poly.hpp"
#include "hcert/galois/osada.hpp"
#include "hcert/galois/small_point.hpp"
#include "hcert/galois/sn_an.hpp"
#include "hcert/heights/algebraic.hpp"
#include "hcert/heights/neron_tate.hpp"
#include "hcert/heights/weil.hpp"
#include "hcert/matgroups/lemmas.hpp"
#include "hcert/matgroups/psl2.hpp"
#include "hcert/matgroups/subgroup.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace hcert;
using exact::IntPolynomial;
using heights::HeightValue;

namespace {

struct Check {
    std::string failure;
    void require(bool ok, const std::string& what)
    {
        if (!ok && failure.empty()) failure = what;
    }
};

bool overlaps(const HeightValue& a, const HeightValue& b) { return a.lower() <= b.upper() && b.lower() <= a.upper(); }

// a < b with certainty.
bool strictly_below(const HeightValue& a, const HeightValue& b) { return !(b.lower() <= a.upper()); }

bool is_prime(long n)
{
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ---------------------------------------------------------------------------

void osada_discriminants(Check& c)
{
    for (long n = 2; n <= 60; ++n) {
        const auto r = galois::osada_disc_check(n);
        mpz_class nn, m1;
        mpz_ui_pow_ui(nn.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n));
        mpz_ui_pow_ui(m1.get_mpz_t(), static_cast<unsigned long>(n - 1), static_cast<unsigned long>(n - 1));
        const mpz_class expected = n % 2 == 0 ? mpz_class(nn + m1) : mpz_class(nn - m1);
        c.require(r.ok && abs(r.disc) == expected, "disc mismatch at n=" + std::to_string(n));
    }
}

void gm_small_points(Check& c)
{
    HeightValue prev;
    for (long n = 5; n <= 100; ++n) {
        const auto g = galois::gm_small_point(n);
        const std::string at = " at n=" + std::to_string(n);
        c.require(g.ok(), "certificate failed" + at);
        c.require(g.h.certainly_positive(), "h not positive" + at);
        c.require(g.h.upper() <= g.bound.lower(), "h above bound" + at);
        c.require(g.h.err_double() <= 1e-9, "height err above 1e-9" + at);
        c.require(std::fabs(g.bound.mid_double() - std::log(2.0) / static_cast<double>(n - 1)) <= 1e-15,
                  "bound differs from log2/(n-1)" + at);
        if (n > 5) c.require(strictly_below(g.bound, prev), "bound not decreasing" + at);
        prev = g.bound;
    }
    c.require(prev.upper().to_double() < 0.0071, "bound does not tend to zero");
}

void galois_verdicts(Check& c)
{
    for (long n = 5; n <= 14; ++n) {
        const auto g = galois::sn_an_certify(galois::osada_polynomial(n));
        const std::string at = " at n=" + std::to_string(n);
        c.require(g.verdict == galois::GaloisCertificate::Verdict::is_Sn, "verdict " + g.verdict_name() + at);
        c.require(g.group_evidence.size() <= 200, "more than 200 primes" + at);
    }
}

void matrix_groups(Check& c)
{
    using namespace matgroups;
    for (const auto& [p, n] : {std::pair<u32, u32>{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}})
        c.require(mpz_class(static_cast<unsigned long>(enumerate_group_order(p, n))) == group_order(p, n),
                  "group order at p=" + std::to_string(p) + " n=" + std::to_string(n));

    for (const auto& [p, n] : {std::pair<u32, u32>{2, 2}, {2, 3}, {3, 2}, {5, 2}, {3, 3}})
        for (u32 k = 1; k <= n; ++k) {
            const auto rep = uk_report(p, n, k);
            mpz_class expected;
            mpz_ui_pow_ui(expected.get_mpz_t(), p, 4 * (n - k));
            c.require(rep.ok() && mpz_class(static_cast<unsigned long>(rep.order)) == expected,
                      "U^(k) order at p=" + std::to_string(p) + " n=" + std::to_string(n) + " k=" + std::to_string(k));
        }

    for (const auto& [p, n, d] : {std::array<u32, 3>{5, 3, 1}, {2, 6, 1}, {3, 3, 1}}) {
        const auto rep = commutator_witness(p, n, d);
        const std::string at = " at (" + std::to_string(p) + "," + std::to_string(n) + "," + std::to_string(d) + ")";
        c.require(rep.closed_form_holds, "commutator closed form" + at);
        c.require(rep.count_bound_holds, "commutator count" + at);
        // Recount distinct commutators with plain integer arithmetic.
        long m = 1;
        for (u32 i = 0; i < n; ++i) m *= p;
        std::set<std::array<long, 4>> seen;
        for (u64 x : rep.xs) {
            const long t = static_cast<long>(d * x) % m;
            const long t2 = t * t % m;
            // [A, B] = [[1 + t^2 + t^4, -t^3], [t^3, 1 - t^2]] for the unipotents with entry t.
            seen.insert({(1 + t2 + t2 * t2) % m, (m - t2 * t % m) % m, t2 * t % m, (1 - t2 + m) % m});
        }
        c.require(seen.size() == rep.distinct, "distinct commutator count" + at);
        u64 lhs = rep.distinct * d;
        c.require(lhs * lhs * lhs >= static_cast<u64>(m), "count below p^(n/3)/d" + at);
    }

    for (const auto& [p, n] : {std::pair<u32, u32>{5, 2}, {3, 2}}) {
        const Zmod r(p, n);
        const auto ambient = subgroup_closure(r, standard_generators(r));
        std::mt19937_64 rng(1000 + p);
        for (int i = 0; i < 1000; ++i) {
            std::vector<Mat2Mod> gens{random_gl2(r, rng)};
            if (i % 2) gens.push_back(random_gl2(r, rng));
            const auto h = subgroup_closure(r, gens, kDefaultCap, &ambient);
            const auto rep = verify_bound_H(h);
            c.require(rep.ok() && h.order() == rep.order, "bound on |H| mod " + std::to_string(r.modulus()));
        }
    }

    c.require(solvability_check(2).solvable, "p=2 not solvable");
    c.require(solvability_check(3).solvable, "p=3 not solvable");
    c.require(!solvability_check(5).solvable, "p=5 control solvable");
}

void supersingular_search(Check& c)
{
    const elliptic::CurveQ e1(-1, 0), e2(0, 1);
    std::vector<std::uint64_t> x1, x2;
    for (long p = 5; p <= 500; ++p) {
        if (!is_prime(p)) continue;
        if (p % 4 == 3) x1.push_back(static_cast<std::uint64_t>(p));
        if (p % 3 == 2) x2.push_back(static_cast<std::uint64_t>(p));
    }
    c.require(elliptic::find_supersingular_primes(e1, 500) == x1, "y^2 = x^3 - x pattern");
    c.require(elliptic::find_supersingular_primes(e2, 500) == x2, "y^2 = x^3 + 1 pattern");
}

// a == X^(m^2) and b == 1, f == X^n - X^2 + T^2, all mod p and coefficientwise.
void check_aux(Check& c, const elliptic::CurveQ& e, std::uint64_t p, elliptic::AuxMode mode)
{
    const auto aux = elliptic::build_aux_poly(e, p, mode);
    const std::string at = " at p=" + std::to_string(p) + " " + elliptic::mode_name(mode);
    const mpz_class q(static_cast<unsigned long>(p));
    auto residue = [&](const mpz_class& v) {
        mpz_class r = v % q;
        if (r < 0) r += q;
        return r;
    };
    const int m2 = aux.m * aux.m;
    for (int i = 0; i <= aux.x.a.degree(); ++i)
        c.require(residue(aux.x.a.coeff(static_cast<std::size_t>(i))) == (i == m2 ? 1 : 0), "a mod p" + at);
    for (int i = 0; i <= aux.x.b.degree(); ++i)
        c.require(residue(aux.x.b.coeff(static_cast<std::size_t>(i))) == (i == 0 ? 1 : 0), "b mod p" + at);
    c.require(aux.n == m2 + 2 * static_cast<int>(p), "degree" + at);
    for (const auto& [key, v] : aux.f.terms()) {
        const auto [t, x] = key;
        mpz_class expected = 0;
        if (t == 0 && static_cast<int>(x) == aux.n) expected = 1;
        if (t == 0 && x == 2) expected = q - 1;
        if (t == 2 && x == 0) expected = 1;
        c.require(residue(v) == expected, "f mod p" + at);
    }
    for (const auto& [t, x] : {std::pair<unsigned, unsigned>{0, static_cast<unsigned>(aux.n)}, {0, 2}, {2, 0}})
        c.require(residue(aux.f.coeff(t, x)) != 0, "f mod p missing a term" + at);
}

void aux_congruences(Check& c)
{
    check_aux(c, elliptic::CurveQ(0, 1), 5, elliptic::AuxMode::compact);
    check_aux(c, elliptic::CurveQ(-1, 0), 7, elliptic::AuxMode::compact);
    check_aux(c, elliptic::CurveQ(0, 1), 5, elliptic::AuxMode::paper);
}

void small_point_certificates(Check& c)
{
    for (const auto& [a4, a6] : {std::pair<long, long>{0, 1}, {-1, 0}}) {
        const elliptic::CurveQ e(a4, a6);
        const auto primes = elliptic::find_supersingular_primes(e, 100);
        std::unique_ptr<HeightValue> prev;
        for (std::size_t i = 0; i < 3; ++i) {
            const auto cert = elliptic::small_point_certificate(e, primes[i], elliptic::AuxMode::compact, 1);
            const std::string at = " on " + e.to_string() + " at p=" + std::to_string(primes[i]);
            c.require(cert.identity_holds, "exact identity" + at);
            for (const auto& v : cert.verdicts) {
                const bool height = v.name == "height_bound" || v.name == "height_positive";
                if (height && !cert.irreducible()) continue;
                c.require(v.status == elliptic::CertificateVerdict::Status::pass, v.name + at);
            }
            if (cert.irreducible()) {
                c.require(cert.h_alpha.upper() <= cert.bound.lower(), "h above bound" + at);
                c.require(cert.h_alpha.certainly_positive(), "h not positive" + at);
            }
            const long p = static_cast<long>(primes[i]);
            const long m2 = p * p;
            c.require(overlaps(cert.bound, (cert.c.scale(4 * p) + heights::gm_small_point_bound(2)).scale(1, m2 - 4 * p) + cert.c),
                      "bound formula" + at);
            if (prev) c.require(strictly_below(cert.bound, *prev), "bounds not decreasing" + at);
            prev = std::make_unique<HeightValue>(cert.bound);
        }
    }
}

heights::AlgebraicNumber random_algebraic(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> deg(1, 6), coef(-6, 6);
    for (;;) {
        const int d = deg(rng);
        std::vector<mpz_class> cs(static_cast<std::size_t>(d) + 1);
        for (auto& x : cs) x = coef(rng);
        if (cs.back() == 0) cs.back() = 1;
        if (cs.front() == 0) cs.front() = -1;
        auto a = heights::AlgebraicNumber::from_root_index(IntPolynomial(cs).primitive_part(), 0);
        if (a.verified()) return a;
    }
}

// Torsion candidates by Nagell-Lutz: integral points with y = 0 or y^2 | 4a^3 + 27b^2.
std::vector<elliptic::RationalPoint> torsion_points(const elliptic::CurveQ& e)
{
    const mpz_class d = 4 * e.a4() * e.a4() * e.a4() + 27 * e.a6() * e.a6();
    std::vector<elliptic::RationalPoint> out;
    for (long x = -2000; x <= 2000; ++x) {
        const mpz_class rhs = mpz_class(x) * x * x + e.a4() * x + e.a6();
        if (rhs < 0 || mpz_perfect_square_p(rhs.get_mpz_t()) == 0) continue;
        const mpz_class y = sqrt(rhs);
        if (y != 0 && !mpz_divisible_p(d.get_mpz_t(), mpz_class(y * y).get_mpz_t())) continue;
        for (const mpz_class& s : {y, mpz_class(-y)}) {
            const auto pt = elliptic::RationalPoint::affine(mpq_class(x), mpq_class(s));
            if (elliptic::torsion_order(e, pt, 12)) out.push_back(pt);
            if (y == 0) break;
        }
    }
    return out;
}

void height_properties(Check& c)
{
    std::mt19937_64 rng(8);
    const HeightValue log2 = heights::gm_small_point_bound(2);
    for (int i = 0; i < 200; ++i) {
        const auto a = random_algebraic(rng);
        const HeightValue h = heights::weil_height(a);
        for (unsigned k = 2; k <= 3; ++k) {
            const auto ak = heights::power(a, k);
            if (ak.verified())
                c.require(overlaps(heights::weil_height(ak), h.scale(static_cast<long>(k))), "h(a^k) != k h(a)");
        }
        c.require(overlaps(heights::weil_height(heights::inverse(a)), h), "h(1/a) != h(a)");
        c.require(heights::weil_height(heights::shift(a, 1)).lower() <= (h + log2).upper(), "h(a+1) > h(a) + log 2");
    }

    std::size_t torsion = 0;
    for (const auto& [a4, a6] : {std::pair<long, long>{-1, 0}, {0, 1}, {0, 4}, {-43, 166}, {-4, 0}}) {
        const elliptic::CurveQ e(a4, a6);
        for (const auto& pt : torsion_points(e)) {
            ++torsion;
            c.require(heights::neron_tate_height(e, pt).contains_zero(), "nonzero height on torsion on " + e.to_string());
        }
    }
    // Torsion groups: Z/2 x Z/2, Z/6, Z/3, Z/7, Z/2 x Z/2.
    c.require(torsion == 19, "expected 19 nontrivial torsion points, found " + std::to_string(torsion));

    struct Gen {
        long a4, a6, x, y;
    };
    const Gen gens[] = {{0, -2, 3, 5}, {0, 17, -2, 3}, {-2, 0, -1, 1}, {1, 1, 0, 1}};
    std::uniform_int_distribution<long> pick(0, 3), mult(1, 8);
    for (int i = 0; i < 100; ++i) {
        const Gen& g = gens[pick(rng)];
        const elliptic::CurveQ e(g.a4, g.a6);
        const auto pt = elliptic::multiply(e, elliptic::RationalPoint::affine(g.x, g.y), mult(rng));
        const HeightValue h = heights::neron_tate_height(e, pt);
        const HeightValue h2 = heights::neron_tate_height(e, elliptic::dbl(e, pt));
        c.require(overlaps(h2, h.scale(4)), "h([2]P) != 4 h(P) on " + e.to_string());
    }
}

std::string run_cli(const std::vector<std::string>& args)
{
    std::vector<const char*> argv{"hcert"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    cli::run_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return out.str();
}

std::string run_binary(const std::string& args)
{
    std::string out;
    FILE* f = popen((std::string(HCERT_TOOL) + " " + args + " 2>/dev/null").c_str(), "r");
    if (!f) return out;
    char buf[4096];
    for (std::size_t k; (k = fread(buf, 1, sizeof buf, f)) > 0;) out.append(buf, k);
    pclose(f);
    return out;
}

void determinism(Check& c)
{
    const std::vector<std::vector<std::string>> configs{
        {"gm", "--n", "5", "--n-max", "25"},
        {"galois", "--poly", "[-1, -1, 0, 0, 0, 0, 0, 1]"},
        {"ec", "--a4", "0", "--a6", "1", "--p", "5"},
        {"ec", "--a4", "0", "--a6", "1", "--p", "11", "--mode", "paper"},
        {"ss-primes", "--a4", "-1", "--a6", "0", "--bound", "200"},
        {"matgrp", "--p", "5", "--n", "2", "--samples", "60", "--seed", "3"},
        {"matgrp", "--p", "2", "--n", "3", "--samples", "60", "--seed", "4"},
        {"height", "--poly", "[-1, -1, 0, 0, 0, 1]", "--root", "2"},
        {"height", "--a4", "0", "--a6", "-2", "--x", "3", "--y", "5"},
    };
    for (const auto& base : configs) {
        std::string joined;
        for (const auto& a : base) joined += (joined.empty() ? "" : " ") + ("'" + a + "'");
        auto args = base;
        args.insert(args.end(), {"--json", "--jobs", "1"});
        const std::string a = run_cli(args);
        args.back() = "4";
        const std::string b = run_cli(args);
        const std::string x = run_binary(joined + " --json --jobs 1");
        const std::string y = run_binary(joined + " --json --jobs 4");
        c.require(!a.empty() && a == b, "in-process reports differ for " + joined);
        c.require(!x.empty() && x == y && x == a, "executable reports differ for " + joined);
    }
}

struct Criterion {
    int id;
    const char* title;
    double limit_s;
    std::function<void(Check&)> body;
};

}  // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "Osada discriminant identity, n in [2, 60]", 10, osada_discriminants},
        {2, "G_m small points, n in [5, 100]", 120, gm_small_points},
        {3, "Galois verdicts S_n for X^n - X - 1, n in [5, 14]", 60, galois_verdicts},
        {4, "matrix-group suite", 120, matrix_groups},
        {5, "supersingular primes in [5, 500] vs CM patterns", 30, supersingular_search},
        {6, "auxiliary polynomial congruences", 300, aux_congruences},
        {7, "small-point certificates, first three supersingular primes", 600, small_point_certificates},
        {8, "height engine properties", 120, height_properties},
        {9, "CLI determinism across runs and --jobs", 600, determinism},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        Check check;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            cr.body(check);
        } catch (const std::exception& e) {
            check.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (check.failure.empty() && secs > cr.limit_s) check.failure = "runtime above " + std::to_string(cr.limit_s) + " s";
        const bool ok = check.failure.empty();
        if (!ok) ++failed;
        std::printf("criterion %d: %s  %-62s %9.3f s%s%s\n", cr.id, ok ? "PASS" : "FAIL", cr.title, secs,
                    ok ? "" : "  ", check.failure.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
