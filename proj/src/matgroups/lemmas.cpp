#include "hcert/matgroups/lemmas.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace hcert::matgroups {

namespace {

constexpr u64 kEnumerationLimit = 500000;

mpz_class ipow(u64 b, u64 e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), b, e);
    return r;
}

u32 upow(u32 b, u32 e)
{
    u32 r = 1;
    while (e--) r *= b;
    return r;
}

bool prime(u32 p)
{
    if (p < 2) return false;
    for (u32 d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

mpz_class group_order(u32 p, u32 n)
{
    if (!prime(p)) throw std::invalid_argument("p must be prime");
    if (n < 1) throw std::invalid_argument("n must be positive");
    const mpz_class pp(p);
    return (pp * pp - 1) * (pp * pp - pp) * ipow(p, 4ull * (n - 1));
}

u64 enumerate_group_order(u32 p, u32 n)
{
    const Zmod r(p, n);
    const u32 m = r.modulus();
    u64 count = 0;
    for (u32 a = 0; a < m; ++a)
        for (u32 b = 0; b < m; ++b)
            for (u32 c = 0; c < m; ++c)
                for (u32 d = 0; d < m; ++d)
                    if (r.is_unit(r.sub(r.mul(a, d), r.mul(b, c)))) ++count;
    return count;
}

SubgroupHandle uk_subgroup(u32 p, u32 n, u32 k)
{
    const Zmod r(p, n);
    if (k < 1 || k > n) throw std::out_of_range("k out of range");
    const u32 pk = upow(p, k);
    const u32 span = r.modulus() / pk;
    std::vector<Mat2Mod> elems;
    elems.reserve(static_cast<std::size_t>(span) * span * span * span);
    for (u32 a = 0; a < span; ++a)
        for (u32 b = 0; b < span; ++b)
            for (u32 c = 0; c < span; ++c)
                for (u32 d = 0; d < span; ++d)
                    elems.push_back({r.add(1, a * pk), b * pk, c * pk, r.add(1, d * pk)});
    std::vector<Mat2Mod> gens;
    if (k < n) {
        gens = {Mat2Mod::of(r, 1 + pk, 0, 0, 1), Mat2Mod::of(r, 1, pk, 0, 1), Mat2Mod::of(r, 1, 0, pk, 1),
                Mat2Mod::of(r, 1, 0, 0, 1 + pk)};
    }
    return from_elements(r, std::move(elems), std::move(gens));
}

UkReport uk_report(u32 p, u32 n, u32 k)
{
    UkReport rep;
    rep.p = p;
    rep.n = n;
    rep.k = k;
    const SubgroupHandle u = uk_subgroup(p, n, k);
    const Zmod& r = u.ring();
    rep.order = u.order();
    rep.expected_order = ipow(p, 4ull * (n - k));

    rep.normal = u.verify_closed();
    for (const auto& g : standard_generators(r)) {
        const Mat2Mod gi = inverse(r, g);
        for (const auto& x : u.elements())
            if (!u.contains(mul(r, mul(r, g, x), gi))) rep.normal = false;
    }

    const Zmod target(p, k);
    std::vector<Mat2Mod> images;
    for (const auto& g : standard_generators(r)) images.push_back(reduce_to(r, target, g));
    const SubgroupHandle image = subgroup_closure(target, images);
    rep.onto = mpz_class(image.order()) == group_order(p, k);

    const mpz_class g_order = group_order(p, n);
    if (g_order <= kEnumerationLimit) {
        rep.kernel_method = "enumeration";
        const u32 m = r.modulus(), pk = target.modulus();
        u64 kernel = 0;
        bool inside = true;
        for (u32 a = 0; a < m; ++a)
            for (u32 b = 0; b < m; ++b)
                for (u32 c = 0; c < m; ++c)
                    for (u32 d = 0; d < m; ++d) {
                        Mat2Mod x{a, b, c, d};
                        if (!x.in_gl2(r)) continue;
                        if (a % pk == 1 % pk && b % pk == 0 && c % pk == 0 && d % pk == 1 % pk) {
                            ++kernel;
                            inside &= u.contains(x);
                        }
                    }
        rep.kernel_matches = inside && kernel == rep.order;
    } else {
        rep.kernel_method = "order bookkeeping";
        rep.kernel_matches = mpz_class(rep.order) * group_order(p, k) == g_order;
    }
    return rep;
}

BoundHReport verify_bound_H(const SubgroupHandle& h)
{
    BoundHReport rep;
    const u32 p = h.ring().p();
    rep.order = h.order();
    rep.exponent = h.exponent();
    u64 e = rep.exponent;
    while (e % p == 0) {
        e /= p;
        ++rep.ord_p_exponent;
    }
    rep.middle = ipow(p, 4ull + 8ull * rep.ord_p_exponent);
    mpz_class ex8;
    mpz_ui_pow_ui(ex8.get_mpz_t(), rep.exponent, 8);
    rep.right = ipow(p, 4) * ex8;
    rep.strict_holds = mpz_class(rep.order) < rep.middle;
    rep.weak_holds = rep.middle <= rep.right;
    rep.slack = 4.0 + 8.0 * rep.ord_p_exponent - std::log(static_cast<double>(rep.order)) / std::log(static_cast<double>(p));
    return rep;
}

CommutatorReport commutator_witness(u32 p, u32 n, u32 d)
{
    if (d < 1) throw std::invalid_argument("d must be positive");
    const Zmod r(p, n);
    CommutatorReport rep;
    rep.p = p;
    rep.n = n;
    rep.d = d;
    const mpz_class pn = ipow(p, n);
    rep.closed_form_holds = true;
    std::set<u64> seen;
    for (u64 x = 0;; ++x) {
        const mpz_class t = mpz_class(static_cast<unsigned long>(d)) * static_cast<unsigned long>(x);
        if (t * t * t >= pn) break;
        rep.xs.push_back(x);
        const long long tv = static_cast<long long>(d) * static_cast<long long>(x);
        const Mat2Mod a = Mat2Mod::of(r, 1, tv, 0, 1);
        const Mat2Mod b = Mat2Mod::of(r, 1, 0, tv, 1);
        const Mat2Mod comm = mul(r, mul(r, a, b), mul(r, inverse(r, a), inverse(r, b)));
        const u32 t2 = r.mul(r.reduce(tv), r.reduce(tv));
        const u32 t3 = r.mul(t2, r.reduce(tv));
        const u32 t4 = r.mul(t2, t2);
        const Mat2Mod closed{r.add(r.add(1 % r.modulus(), t2), t4), r.neg(t3), t3, r.sub(1 % r.modulus(), t2)};
        if (!(comm == closed)) rep.closed_form_holds = false;
        seen.insert(comm.code(r));
    }
    rep.distinct = seen.size();
    const mpz_class c(static_cast<unsigned long>(rep.distinct)), dd(d);
    rep.count_bound_holds = c * c * c * dd * dd * dd >= pn;
    return rep;
}

bool ExponentFacts::ok() const
{
    if (!det_onto || !witness_has_order) return false;
    if (p % 2 == 1) return unit_group_cyclic;
    return true;
}

ExponentFacts exponent_facts(u32 p, u32 n)
{
    const Zmod r(p, n);
    ExponentFacts f;
    f.p = p;
    f.n = n;
    const u32 m = r.modulus();
    f.unit_group_order = static_cast<u64>(m / p) * (p - 1);
    u32 wanted_unit = 1;
    if (p % 2 == 1) {
        for (u32 g = 2; g < m && !f.unit_group_cyclic; ++g)
            if (r.is_unit(g) && r.order(g) == f.unit_group_order) {
                f.unit_group_cyclic = true;
                f.unit_generator = g;
            }
        f.required_divisor = f.unit_group_order;
        wanted_unit = f.unit_generator;
    } else if (n >= 2) {
        f.required_divisor = u64{1} << (n - 2);
        for (u32 g = 1; g < m; g += 2)
            if (r.order(g) == f.required_divisor) {
                f.two_power_element = g;
                break;
            }
        wanted_unit = f.two_power_element;
    } else {
        f.required_divisor = 1;
    }
    f.det_onto = true;
    for (u32 u = 1; u < m; ++u)
        if (r.is_unit(u) && Mat2Mod::of(r, u, 0, 0, 1).det(r) != u) f.det_onto = false;
    if (wanted_unit != 0) {
        f.witness = Mat2Mod::of(r, wanted_unit, 0, 0, 1);
        f.witness_has_order = order(r, f.witness) == f.required_divisor;
    }
    return f;
}

mpz_class psl2_order(u32 p)
{
    if (!prime(p)) throw std::invalid_argument("p must be prime");
    const mpz_class pp(p);
    mpz_class full = pp * (pp * pp - 1);
    return p == 2 ? full : mpz_class(full / 2);
}

mpz_class alternating_order(u32 n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return n >= 2 ? mpz_class(f / 2) : mpz_class(1);
}

bool psl2_vs_alternating(u32 p, u32 n)
{
    if (!prime(p) || p < 5 || n < 6) throw std::invalid_argument("parameters outside p >= 5 prime, n >= 6");
    return psl2_order(p) != alternating_order(n);
}

}  // namespace hcert::matgroups
