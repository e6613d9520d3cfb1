#include "hcert/cli/run.hpp"

#include "hcert/cli/serialize.hpp"
#include "hcert/elliptic/aux_poly.hpp"
#include "hcert/elliptic/certificate.hpp"
#include "hcert/elliptic/reduction.hpp"
#include "hcert/exact/poly_text.hpp"
#include "hcert/exact/roots.hpp"
#include "hcert/galois/osada.hpp"
#include "hcert/galois/small_point.hpp"
#include "hcert/heights/weil.hpp"
#include "hcert/matgroups/psl2.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <ostream>
#include <random>
#include <thread>

namespace hcert::cli {

namespace {

template <class T>
const T& require(const std::optional<T>& v, const char* flag)
{
    if (!v) throw UsageError(std::string("missing required option ") + flag);
    return *v;
}

mpz_class parse_mpz(const std::string& s, const char* flag)
{
    mpz_class v;
    if (s.empty() || v.set_str(s, 10) != 0) throw UsageError(std::string("invalid integer for ") + flag + ": " + s);
    return v;
}

mpq_class parse_mpq(const std::string& s, const char* flag)
{
    mpq_class v;
    if (s.empty() || v.set_str(s, 10) != 0) throw UsageError(std::string("invalid rational for ") + flag + ": " + s);
    if (v.get_den() == 0) throw UsageError(std::string("zero denominator for ") + flag);
    v.canonicalize();
    return v;
}

elliptic::CurveQ parse_curve(const RunConfig& c)
{
    const mpz_class a4 = parse_mpz(require(c.a4, "--a4"), "--a4");
    const mpz_class a6 = parse_mpz(require(c.a6, "--a6"), "--a6");
    if (4 * a4 * a4 * a4 + 27 * a6 * a6 == 0) throw UsageError("singular curve");
    return elliptic::CurveQ(a4, a6);
}

exact::IntPolynomial parse_poly(const RunConfig& c)
{
    try {
        return exact::parse_int_poly(require(c.poly, "--poly"));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("invalid --poly: ") + e.what());
    }
}

int prime_budget(const RunConfig& c)
{
    if (!c.primes) return galois::GaloisOptions{}.prime_budget;
    if (*c.primes < 1 || *c.primes > 100000) throw UsageError("--primes must lie in [1, 100000]");
    return static_cast<int>(*c.primes);
}

/// Runs fn(i) for i < count on `jobs` threads and hands the results to
/// consume(i, result) in index order. The first exception by index is
/// rethrown after every earlier result has been consumed.
template <class T>
void ordered_parallel(std::size_t count, unsigned jobs, const std::function<T(std::size_t)>& fn,
                      const std::function<void(std::size_t, T&)>& consume)
{
    std::vector<std::optional<T>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                slots[i].emplace(fn(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t threads = std::max<std::size_t>(1, std::min<std::size_t>(jobs, count));
    std::vector<std::thread> pool;
    for (std::size_t k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (std::size_t i = 0; i < count; ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        consume(i, *slots[i]);
    }
}

// gm ------------------------------------------------------------------------

struct GmItem {
    galois::OsadaDiscCheck disc;
    galois::GmSmallPoint point;
};

void run_gm(const RunConfig& c, Report& rep)
{
    const long n0 = require(c.n, "--n");
    const long n1 = c.n_max.value_or(n0);
    if (n0 < 5) throw UsageError("--n must be at least 5");
    if (n1 < n0) throw UsageError("--n-max must be at least --n");
    if (n1 > 2000) throw UsageError("--n-max must be at most 2000");
    galois::GaloisOptions go;
    go.prime_budget = prime_budget(c);

    bool monotone = true;
    std::optional<heights::HeightValue> prev;
    ordered_parallel<GmItem>(
        static_cast<std::size_t>(n1 - n0 + 1), c.jobs,
        [&](std::size_t i) {
            const long n = n0 + static_cast<long>(i);
            return GmItem{galois::osada_disc_check(n), galois::gm_small_point(n, go, c.precision)};
        },
        [&](std::size_t, GmItem& it) {
            const long n = it.point.n;
            rep.add("osada_discriminant n=" + std::to_string(n),
                    "disc(X^n - X - 1) = +-(n^n + (-1)^n (n-1)^(n-1))", pass_if(it.disc.ok), to_json(it.disc));
            Status s = Status::inconclusive;
            if (it.point.ok())
                s = Status::pass;
            else if (it.point.alpha.verified() && (!it.point.positive || !it.point.within_bound))
                s = Status::fail;
            rep.add("gm_small_point n=" + std::to_string(n),
                    "0 < h(alpha) <= log 2/(n-1) for a root alpha of X^n - X - 1 with group S_n", s,
                    to_json(it.point));
            if (prev && !(it.point.bound.upper() < prev->lower())) monotone = false;
            prev = it.point.bound;
        });
    if (n1 > n0)
        rep.add("bound_monotone", "log 2/(n-1) strictly decreases to 0", pass_if(monotone),
                {{"from", n0}, {"to", n1}});
}

// galois --------------------------------------------------------------------

void run_galois(const RunConfig& c, Report& rep)
{
    exact::IntPolynomial f = parse_poly(c);
    if (f.degree() < 2) throw UsageError("--poly must have degree at least 2");
    f = f.primitive_part();
    galois::GaloisOptions go;
    go.prime_budget = prime_budget(c);
    const auto cert = galois::sn_an_certify(f, go);
    Status s = Status::inconclusive;
    if (cert.verdict != galois::GaloisCertificate::Verdict::inconclusive)
        s = Status::pass;
    else if (cert.irreducibility.kind == galois::IrreducibilityCertificate::Kind::reducible)
        s = Status::fail;
    rep.add("sn_an_certify", "Frobenius cycle types and Jordan's criterion: Gal(f) contains A_n", s, to_json(cert));
}

// ec ------------------------------------------------------------------------

void run_ec(const RunConfig& c, Report& rep)
{
    const elliptic::CurveQ e = parse_curve(c);
    const long p = require(c.p, "--p");
    if (p < 5 || !exact::is_prime(static_cast<exact::u64>(p))) throw UsageError("--p must be a prime >= 5");
    const auto mode = elliptic::parse_mode(c.mode.value_or("compact"));
    if (!mode) throw UsageError("--mode must be paper or compact");
    const long zeta = c.zeta.value_or(1);
    if (zeta != 1 && zeta != -1) throw UsageError("--zeta must be 1 or -1");
    if (!elliptic::reduction_info(e, static_cast<std::uint64_t>(p)).supersingular)
        throw UsageError("p = " + std::to_string(p) + " is not supersingular for the curve");

    elliptic::CertificateOptions opts;
    opts.bits = c.precision;
    opts.galois.prime_budget = prime_budget(c);
    const auto cert =
        elliptic::small_point_certificate(e, static_cast<std::uint64_t>(p), *mode, static_cast<int>(zeta), opts);

    rep.add("aux_congruence", "f = X^(2p) a - (X^2 - T^2) b = X^n - X^2 + T^2 mod p, a = X^(m^2), b = 1 mod p",
            Status::pass, {{"p", p}, {"m", cert.m}, {"n", cert.n}, {"mode", elliptic::mode_name(*mode)}});
    rep.add("exact_identity", "X^(2p) a - (X^2 - zeta^2) b = f(zeta, X)", pass_if(cert.identity_holds),
            {{"degree", cert.g.degree()}});
    for (const auto& v : cert.verdicts) {
        Status s = Status::inconclusive;
        if (v.status == elliptic::CertificateVerdict::Status::pass) s = Status::pass;
        if (v.status == elliptic::CertificateVerdict::Status::fail) s = Status::fail;
        rep.add(v.name, v.detail, s, json::object());
    }
    Status s = Status::fail;
    if (cert.ok()) s = cert.irreducible() ? Status::pass : Status::inconclusive;
    rep.add("small_point_certificate", "small point (alpha', beta') on E with h_hat bounded by (4cp + log 2)/(m^2 - 4p)",
            s, to_json(cert));
}

// ss-primes -----------------------------------------------------------------

void run_ss_primes(const RunConfig& c, Report& rep)
{
    const elliptic::CurveQ e = parse_curve(c);
    const long bound = require(c.bound, "--bound");
    if (bound < 5 || bound > 10000000) throw UsageError("--bound must lie in [5, 10^7]");
    std::vector<std::uint64_t> primes;
    for (std::uint64_t q = 5; q <= static_cast<std::uint64_t>(bound); q = exact::next_prime(q + 1)) primes.push_back(q);

    json ss = json::array();
    bool hasse = true;
    std::size_t good = 0;
    ordered_parallel<elliptic::ReductionInfo>(
        primes.size(), c.jobs, [&](std::size_t i) { return elliptic::reduction_info(e, primes[i]); },
        [&](std::size_t, elliptic::ReductionInfo& r) {
            if (!r.good) return;
            ++good;
            const long long a = r.a_p;
            if (a * a > 4 * static_cast<long long>(r.p)) hasse = false;
            if (r.supersingular) ss.push_back(r.p);
        });
    rep.add("supersingular_primes", "a_p = 0 at good primes 5 <= p <= bound, by point counting", Status::pass,
            {{"curve", to_json(e)}, {"bound", bound}, {"primes", ss}});
    rep.add("hasse_bound", "|a_p| <= 2 sqrt(p)", pass_if(hasse), {{"good_primes", good}});
}

// matgrp --------------------------------------------------------------------

void run_matgrp(const RunConfig& c, Report& rep)
{
    const long p = require(c.p, "--p");
    const long n = require(c.n, "--n");
    if (p < 2 || !exact::is_prime(static_cast<exact::u64>(p))) throw UsageError("--p must be prime");
    if (n < 1) throw UsageError("--n must be positive");
    const long samples = c.samples.value_or(100);
    if (samples < 0 || samples > 1000000) throw UsageError("--samples must lie in [0, 10^6]");
    std::optional<matgroups::Zmod> ring;
    try {
        ring.emplace(static_cast<matgroups::u32>(p), static_cast<matgroups::u32>(n));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto pu = static_cast<matgroups::u32>(p);
    const auto nu = static_cast<matgroups::u32>(n);

    {
        const mpz_class expected = matgroups::group_order(pu, nu);
        json data = {{"formula", to_json(expected)}};
        Status s = Status::inconclusive;
        mpz_class size;
        mpz_ui_pow_ui(size.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(4 * n));
        if (size <= (1u << 24)) {
            const auto counted = matgroups::enumerate_group_order(pu, nu);
            data["enumerated"] = counted;
            s = pass_if(expected == mpz_class(static_cast<unsigned long>(counted)));
        } else {
            data["enumerated"] = nullptr;
        }
        rep.add("group_order", "|GL_2(Z/p^n Z)| = (p^2 - 1)(p^2 - p) p^(4(n-1))", s, data);
    }
    for (matgroups::u32 k = 1; k < nu; ++k) {
        const auto r = matgroups::uk_report(pu, nu, k);
        rep.add("uk_subgroup k=" + std::to_string(k),
                "U^(k) = 1 + p^k M_2 is normal of order p^(4(n-k)), the kernel of reduction mod p^k", pass_if(r.ok()),
                to_json(r));
    }
    {
        const auto r = matgroups::commutator_witness(pu, nu, 1);
        rep.add("commutator_witness", "commutators of [[1,x],[0,1]] and [[1,0],[x,1]]: at least p^(n/3) distinct",
                pass_if(r.ok()), to_json(r));
    }
    {
        const auto f = matgroups::exponent_facts(pu, nu);
        rep.add("exponent_facts", "exp(GL_2(Z/p^n Z)) is divisible by the unit group exponent", pass_if(f.ok()),
                to_json(f));
    }

    // Generator pairs are drawn sequentially so the sample set is independent of --jobs.
    std::mt19937_64 rng(c.seed);
    std::vector<std::pair<matgroups::Mat2Mod, matgroups::Mat2Mod>> pairs;
    for (long i = 0; i < samples; ++i) {
        auto g1 = matgroups::random_gl2(*ring, rng);
        auto g2 = matgroups::random_gl2(*ring, rng);
        pairs.emplace_back(g1, g2);
    }
    std::optional<matgroups::SubgroupHandle> ambient;
    if (samples > 0 && matgroups::group_order(pu, nu) <= matgroups::kDefaultCap)
        ambient.emplace(matgroups::subgroup_closure(*ring, matgroups::standard_generators(*ring)));

    struct Sample {
        bool skipped = false;
        matgroups::BoundHReport report;
    };
    std::size_t checked = 0, skipped = 0, violations = 0;
    double min_slack = 0;
    std::uint64_t max_order = 0;
    ordered_parallel<Sample>(
        pairs.size(), c.jobs,
        [&](std::size_t i) {
            Sample s;
            try {
                const auto h = matgroups::subgroup_closure(*ring, {pairs[i].first, pairs[i].second},
                                                           matgroups::kDefaultCap, ambient ? &*ambient : nullptr);
                s.report = matgroups::verify_bound_H(h);
            } catch (const matgroups::CapExceeded&) {
                s.skipped = true;
            }
            return s;
        },
        [&](std::size_t, Sample& s) {
            if (s.skipped) {
                ++skipped;
                return;
            }
            if (checked == 0 || s.report.slack < min_slack) min_slack = s.report.slack;
            ++checked;
            if (!s.report.ok()) ++violations;
            max_order = std::max<std::uint64_t>(max_order, s.report.order);
        });
    Status bs = violations ? Status::fail : (checked ? Status::pass : Status::inconclusive);
    if (samples == 0) bs = Status::inconclusive;
    rep.add("bound_H", "|H| < p^(4 + 8 ord_p exp H) <= p^4 exp(H)^8 for random 2-generator H", bs,
            {{"samples", samples},
             {"seed", c.seed},
             {"checked", checked},
             {"skipped", skipped},
             {"violations", violations},
             {"min_slack", min_slack},
             {"max_order", max_order}});

    if (p <= 5) {
        const auto r = matgroups::solvability_check(pu);
        rep.add("solvability", "PSL_2(F_p) is solvable for p = 2, 3 and not for p = 5", pass_if(r.solvable == (p < 5)),
                to_json(r));
    } else {
        json orders = json::array();
        bool differ = true;
        for (matgroups::u32 m = 6; m <= 12; ++m) {
            differ = differ && matgroups::psl2_vs_alternating(pu, m);
            orders.push_back({{"m", m}, {"alternating", to_json(matgroups::alternating_order(m))}});
        }
        rep.add("psl2_vs_alternating", "|PSL_2(F_p)| differs from |A_m| for 6 <= m <= 12", pass_if(differ),
                {{"psl2", to_json(matgroups::psl2_order(pu))}, {"alternating", orders}});
    }
}

// height --------------------------------------------------------------------

void run_height(const RunConfig& c, Report& rep)
{
    if (c.poly) {
        exact::IntPolynomial f = parse_poly(c);
        if (f.degree() < 1) throw UsageError("--poly must have positive degree");
        f = f.primitive_part();
        const long root = c.root.value_or(0);
        if (root < 0 || root >= f.degree()) throw UsageError("--root out of range");
        const auto a = heights::AlgebraicNumber::from_root_index(f, static_cast<std::size_t>(root), prime_budget(c));
        json data = {{"alpha", to_json(a)}, {"irreducibility", to_json(a.irreducibility)}};
        if (!a.verified()) {
            data["h"] = nullptr;
            rep.add("weil_height", "h(alpha) = log M(alpha) / deg alpha", Status::inconclusive, data);
            return;
        }
        data["h"] = to_json(heights::weil_height(a, c.precision));
        rep.add("weil_height", "h(alpha) = log M(alpha) / deg alpha", Status::pass, data);
        return;
    }
    const elliptic::CurveQ e = parse_curve(c);
    const auto pt = elliptic::RationalPoint::affine(parse_mpq(require(c.x, "--x"), "--x"),
                                                    parse_mpq(require(c.y, "--y"), "--y"));
    if (!elliptic::on_curve(e, pt)) throw UsageError("point is not on the curve");
    const long steps = c.steps.value_or(8);
    if (steps < 1 || steps > 16) throw UsageError("--steps must lie in [1, 16]");
    const auto cc = heights::height_compare_constant(e);
    heights::NTConfig cfg;
    cfg.doubling_steps = static_cast<unsigned>(steps);
    cfg.max_steps = std::max<unsigned>(cfg.max_steps, cfg.doubling_steps);
    cfg.c_e = cc.c_e;
    const auto h = heights::neron_tate_height(e, pt, cfg);
    json data = {{"curve", to_json(e)}, {"point", to_json(pt)}, {"h", to_json(h)}, {"steps", steps},
                 {"compare", to_json(cc)}};
    const auto tor = elliptic::torsion_order(e, pt);
    data["torsion_order"] = tor ? json(*tor) : json(nullptr);
    Status s = Status::pass;
    if (tor && !h.contains_zero()) s = Status::fail;
    rep.add("neron_tate_height", "h_hat(P) = lim 4^-k h(x([2^k] P)), within 4^-k C_E/3", s, data);
}

const std::map<std::string, void (*)(const RunConfig&, Report&)>& dispatch_table()
{
    static const std::map<std::string, void (*)(const RunConfig&, Report&)> t = {
        {"gm", run_gm},         {"galois", run_galois}, {"ec", run_ec},
        {"ss-primes", run_ss_primes}, {"matgrp", run_matgrp}, {"height", run_height}};
    return t;
}

}  // namespace

json RunConfig::echo() const
{
    json params = json::object();
    auto put = [&](const char* k, const auto& v) {
        if (v) params[k] = *v;
    };
    put("n", n);
    put("n_max", n_max);
    put("p", p);
    put("samples", samples);
    put("bound", bound);
    put("root", root);
    put("zeta", zeta);
    put("primes", primes);
    put("steps", steps);
    put("a4", a4);
    put("a6", a6);
    put("poly", poly);
    put("mode", mode);
    put("x", x);
    put("y", y);
    return {{"subcommand", subcommand}, {"params", params}, {"seed", seed}, {"precision", precision}};
}

unsigned default_precision()
{
    if (const char* env = std::getenv("HCERT_PRECISION")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 4096) return static_cast<unsigned>(v);
    }
    return 64;
}

Report run(const RunConfig& config)
{
    const auto& table = dispatch_table();
    const auto it = table.find(config.subcommand);
    if (it == table.end()) throw UsageError("unknown subcommand: " + config.subcommand);
    if (config.precision < 16 || config.precision > 4096) throw UsageError("--precision must lie in [16, 4096]");
    if (config.jobs < 1 || config.jobs > 256) throw UsageError("--jobs must lie in [1, 256]");

    Report rep;
    rep.config = config.echo();
    try {
        it->second(config, rep);
    } catch (const exact::ResourceError& e) {
        rep.resource_error = e.what();
    } catch (const matgroups::CapExceeded& e) {
        rep.resource_error = e.what();
    }
    return rep;
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Certified heights, Galois groups and small points"};
    app.require_subcommand(1);
    RunConfig cfg;
    cfg.precision = default_precision();

    auto common = [&](CLI::App* s) {
        s->add_flag("--json", cfg.json_only, "JSON only, no summary on stderr");
        s->add_option("--seed", cfg.seed, "Random seed");
        s->add_option("--precision", cfg.precision, "Precision in bits (default HCERT_PRECISION or 64)");
        s->add_option("--jobs", cfg.jobs, "Worker threads");
        s->add_option("--out", cfg.out, "Write the report to this file");
    };
    auto curve = [&](CLI::App* s) {
        s->add_option("--a4", cfg.a4, "Curve coefficient a4");
        s->add_option("--a6", cfg.a6, "Curve coefficient a6");
    };

    auto* gm = app.add_subcommand("gm", "Small points of G_m from X^n - X - 1");
    gm->add_option("--n", cfg.n, "Degree n >= 5")->required();
    gm->add_option("--n-max", cfg.n_max, "Sweep n through n-max");
    gm->add_option("--primes", cfg.primes, "Prime budget for Galois sampling");
    common(gm);

    auto* gal = app.add_subcommand("galois", "Certify Gal(f) contains A_n, S_n or A_n");
    gal->add_option("--poly", cfg.poly, "Coefficients [c0, c1, ..., cd]")->required();
    gal->add_option("--primes", cfg.primes, "Prime budget");
    common(gal);

    auto* ec = app.add_subcommand("ec", "Small-point certificate on an elliptic curve");
    curve(ec);
    ec->add_option("--p", cfg.p, "Supersingular prime")->required();
    ec->add_option("--mode", cfg.mode, "paper or compact");
    ec->add_option("--zeta", cfg.zeta, "1 or -1");
    ec->add_option("--primes", cfg.primes, "Prime budget");
    common(ec);

    auto* ss = app.add_subcommand("ss-primes", "Supersingular primes up to a bound");
    curve(ss);
    ss->add_option("--bound", cfg.bound, "Largest prime examined")->required();
    common(ss);

    auto* mg = app.add_subcommand("matgrp", "Structural checks in GL_2(Z/p^n Z)");
    mg->add_option("--p", cfg.p, "Prime p")->required();
    mg->add_option("--n", cfg.n, "Exponent n")->required();
    mg->add_option("--samples", cfg.samples, "Random subgroups for the bound on |H|");
    common(mg);

    auto* ht = app.add_subcommand("height", "Weil height of an algebraic number or canonical height of a point");
    ht->add_option("--poly", cfg.poly, "Defining polynomial [c0, ..., cd]");
    ht->add_option("--root", cfg.root, "Root index, sorted by real then imaginary part");
    ht->add_option("--primes", cfg.primes, "Prime budget");
    curve(ht);
    ht->add_option("--x", cfg.x, "x-coordinate (rational)");
    ht->add_option("--y", cfg.y, "y-coordinate (rational)");
    ht->add_option("--steps", cfg.steps, "Doubling steps");
    common(ht);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();

    Report rep;
    try {
        rep = run(cfg);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    const std::string text = rep.dump();
    if (!cfg.out.empty()) {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) {
            err << "cannot write " << cfg.out << "\n";
            return 2;
        }
        f << text;
    } else {
        out << text;
    }
    if (!cfg.json_only) err << rep.summary();
    return rep.exit_code();
}

}  // namespace hcert::cli
