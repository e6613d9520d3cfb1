#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hcert/matgroups/lemmas.hpp"
#include "hcert/matgroups/psl2.hpp"
#include "hcert/matgroups/subgroup.hpp"

#include <array>
#include <numeric>
#include <random>
#include <set>

using namespace hcert::matgroups;

namespace {

// Plain 2x2 integer matrices reduced mod m, independent of Mat2Mod.
using M = std::array<long long, 4>;

M mmul(const M& x, const M& y, long long m)
{
    return {(x[0] * y[0] + x[1] * y[2]) % m, (x[0] * y[1] + x[1] * y[3]) % m, (x[2] * y[0] + x[3] * y[2]) % m,
            (x[2] * y[1] + x[3] * y[3]) % m};
}

bool is_id(const M& x) { return x[0] == 1 && x[1] == 0 && x[2] == 0 && x[3] == 1; }

long long naive_order(M x, long long m)
{
    M acc = x;
    long long k = 1;
    while (!is_id(acc)) {
        acc = mmul(acc, x, m);
        ++k;
    }
    return k;
}

M to_m(const Mat2Mod& x) { return {x.a, x.b, x.c, x.d}; }

long long naive_gl2_count(long long p, long long m)
{
    long long c = 0;
    for (long long a = 0; a < m; ++a)
        for (long long b = 0; b < m; ++b)
            for (long long cc = 0; cc < m; ++cc)
                for (long long d = 0; d < m; ++d)
                    if ((((a * d - b * cc) % m + m) % m) % p != 0) ++c;
    return c;
}

// Inverse of a unit-determinant matrix mod m through the adjugate.
M minv(const M& x, long long m)
{
    long long det = ((x[0] * x[3] - x[1] * x[2]) % m + m) % m;
    long long inv = 1;
    for (long long t = 1; t < m; ++t)
        if (det * t % m == 1) inv = t;
    return {x[3] * inv % m, (m - x[1]) % m * inv % m, (m - x[2]) % m * inv % m, x[0] * inv % m};
}

}  // namespace

TEST_CASE("Z/p^n Z arithmetic")
{
    const Zmod r(3, 2);
    CHECK(r.modulus() == 9);
    CHECK(r.mul(r.inv(2), 2) == 1);
    CHECK(r.order(2) == 6);
    CHECK(r.reduce(-1) == 8);
    CHECK_THROWS_AS(r.inv(3), std::domain_error);
    CHECK_THROWS_AS(Zmod(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Zmod(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(Zmod(257, 2), std::invalid_argument);
}

TEST_CASE("matrix arithmetic against plain integer products")
{
    const Zmod r(5, 2);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const Mat2Mod x = random_gl2(r, rng), y = random_gl2(r, rng);
        CHECK(to_m(mul(r, x, y)) == mmul(to_m(x), to_m(y), 25));
        CHECK(to_m(inverse(r, x)) == minv(to_m(x), 25));
        CHECK(mul(r, x, inverse(r, x)).is_identity());
        CHECK(static_cast<long long>(order(r, x)) == naive_order(to_m(x), 25));
        CHECK(Mat2Mod::decode(r, x.code(r)) == x);
        const Zmod r5(5, 1);
        CHECK(to_m(reduce_to(r, r5, x)) == M{x.a % 5, x.b % 5, x.c % 5, x.d % 5});
    }
    CHECK_THROWS_AS(inverse(r, Mat2Mod::of(r, 5, 0, 0, 1)), std::domain_error);
}

TEST_CASE("group orders match enumeration")
{
    const std::array<std::array<u32, 3>, 5> cases{{{2, 1, 6}, {2, 2, 96}, {3, 1, 48}, {3, 2, 3888}, {5, 1, 480}}};
    for (const auto& [p, n, expected] : cases) {
        CHECK(group_order(p, n) == expected);
        CHECK(enumerate_group_order(p, n) == expected);
        long long m = 1;
        for (u32 i = 0; i < n; ++i) m *= p;
        CHECK(naive_gl2_count(p, m) == static_cast<long long>(expected));
    }
    CHECK(group_order(7, 3) == mpz_class(48) * 42 * 5764801);
}

TEST_CASE("closure examples")
{
    const Zmod r9(3, 2);
    const auto triv = subgroup_closure(r9, {Mat2Mod::identity()});
    CHECK(triv.order() == 1);
    CHECK(triv.exponent() == 1);

    const auto u = subgroup_closure(r9, {Mat2Mod::of(r9, 1, 1, 0, 1)});
    CHECK(u.order() == 9);
    CHECK(u.exponent() == 9);
    CHECK(u.verify_closed());

    const Zmod r4(2, 2);
    const auto g = subgroup_closure(r4, standard_generators(r4));
    CHECK(g.order() == 96);
    CHECK(g.verify_closed());
    long long e = 1;
    for (const auto& x : g.elements()) e = std::lcm(e, naive_order(to_m(x), 4));
    CHECK(static_cast<long long>(g.exponent()) == e);

    CHECK_THROWS_AS(subgroup_closure(r9, standard_generators(r9), 100), CapExceeded);
    CHECK_THROWS_AS(subgroup_closure(r9, {Mat2Mod::of(r9, 3, 0, 0, 1)}), std::invalid_argument);
}

TEST_CASE("standard generators generate the full group")
{
    for (const auto& [p, n] : {std::pair<u32, u32>{2, 1}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
        const Zmod r(p, n);
        CHECK(mpz_class(static_cast<unsigned long>(subgroup_closure(r, standard_generators(r)).order())) == group_order(p, n));
    }
}

TEST_CASE("congruence subgroups")
{
    CHECK(uk_subgroup(3, 2, 1).order() == 81);
    CHECK(uk_subgroup(2, 2, 2).order() == 1);
    CHECK(uk_subgroup(2, 2, 1).order() == 16);
    for (const auto& [p, n] : {std::pair<u32, u32>{2, 2}, {2, 3}, {3, 2}, {5, 2}, {3, 3}})
        for (u32 k = 1; k <= n; ++k) {
            const auto rep = uk_report(p, n, k);
            CHECK(rep.ok());
            CHECK(rep.expected_order * group_order(p, k) == group_order(p, n));
        }
    CHECK_THROWS_AS(uk_report(3, 2, 3), std::out_of_range);
    CHECK_THROWS_AS(uk_report(3, 2, 0), std::out_of_range);
}

TEST_CASE("order bound for subgroups")
{
    const Zmod r9(3, 2);
    const auto u1 = uk_subgroup(3, 2, 1);
    const auto b = verify_bound_H(u1);
    CHECK(b.order == 81);
    CHECK(b.exponent == 3);
    CHECK(b.middle == 531441);
    CHECK(b.ok());
    CHECK(b.slack == doctest::Approx(8.0));

    const auto t = verify_bound_H(subgroup_closure(r9, {Mat2Mod::identity()}));
    CHECK(t.ord_p_exponent == 0);
    CHECK(t.middle == 81);
    CHECK(t.ok());

    for (const auto& [p, n] : {std::pair<u32, u32>{5, 2}, {3, 2}, {2, 3}}) {
        const Zmod r(p, n);
        std::mt19937_64 rng(p * 100 + n);
        for (int i = 0; i < 100; ++i) {
            std::vector<Mat2Mod> gens{random_gl2(r, rng)};
            if (i % 2) gens.push_back(random_gl2(r, rng));
            const auto h = subgroup_closure(r, gens);
            const auto rep = verify_bound_H(h);
            CHECK(rep.ok());
            // p-adic valuation of the exponent, checked by division.
            u64 e = rep.exponent;
            u32 v = 0;
            while (e % p == 0) {
                e /= p;
                ++v;
            }
            CHECK(v == rep.ord_p_exponent);
            CHECK(h.order() % rep.exponent == 0);
        }
    }
}

TEST_CASE("commutator witnesses")
{
    const auto a = commutator_witness(5, 3, 1);
    CHECK(a.ok());
    CHECK(a.distinct == 5);
    const auto b = commutator_witness(2, 6, 1);
    CHECK(b.ok());
    CHECK(b.distinct == 4);
    CHECK(b.xs == std::vector<u64>{0, 1, 2, 3});
    const auto c = commutator_witness(3, 1, 1);
    CHECK(c.xs == std::vector<u64>{0, 1});
    CHECK(c.ok());

    // Recompute each commutator with plain integer matrices.
    for (const auto& [p, n, d] : {std::array<u32, 3>{5, 3, 1}, {3, 4, 1}, {2, 6, 2}, {7, 2, 1}}) {
        const auto rep = commutator_witness(p, n, d);
        long long m = 1;
        for (u32 i = 0; i < n; ++i) m *= p;
        std::set<M> seen;
        for (u64 x : rep.xs) {
            const long long t = static_cast<long long>(d * x) % m;
            const M A{1, t, 0, 1}, B{1, 0, t, 1};
            seen.insert(mmul(mmul(A, B, m), mmul(minv(A, m), minv(B, m), m), m));
        }
        CHECK(seen.size() == rep.distinct);
        CHECK(rep.ok());
    }
}

TEST_CASE("exponent facts")
{
    const auto a = exponent_facts(3, 2);
    CHECK(a.unit_group_cyclic);
    CHECK(a.unit_group_order == 6);
    CHECK(a.unit_generator == 2);
    CHECK(a.ok());

    const auto b = exponent_facts(5, 1);
    CHECK(b.unit_group_order == 4);
    CHECK(Zmod(5, 1).order(b.unit_generator) == 4);
    CHECK(b.ok());

    const auto c = exponent_facts(2, 4);
    CHECK(Zmod(2, 4).order(c.two_power_element) == 4);
    CHECK(c.ok());

    for (const auto& [p, n] : {std::pair<u32, u32>{2, 2}, {2, 3}, {3, 1}, {3, 3}, {7, 2}, {11, 1}}) {
        const auto f = exponent_facts(p, n);
        CHECK(f.ok());
        CHECK(f.det_onto);
        const Zmod r(p, n);
        CHECK(static_cast<long long>(order(r, f.witness)) == naive_order(to_m(f.witness), r.modulus()));
    }
}

TEST_CASE("PSL_2 against alternating groups")
{
    CHECK(psl2_order(7) == 168);
    CHECK(alternating_order(6) == 360);
    CHECK(psl2_vs_alternating(7, 6));
    CHECK(psl2_order(11) == 660);
    CHECK(alternating_order(7) == 2520);
    CHECK(psl2_vs_alternating(11, 7));
    // PSL_2(F_5) and A_5 have equal orders, outside the checked range.
    CHECK(psl2_order(5) == alternating_order(5));
    CHECK_THROWS_AS(psl2_vs_alternating(5, 5), std::invalid_argument);
    CHECK_THROWS_AS(psl2_vs_alternating(4, 6), std::invalid_argument);

    for (u32 p : {5u, 7u, 11u}) {
        const auto g = permutation_closure(psl2_generators(p), p + 1);
        CHECK(mpz_class(static_cast<unsigned long>(g.size())) == psl2_order(p));
    }
}

TEST_CASE("derived series")
{
    CHECK(solvability_check(2).derived_orders == std::vector<std::size_t>{6, 3, 1});
    CHECK(solvability_check(2).solvable);
    CHECK(solvability_check(3).derived_orders == std::vector<std::size_t>{12, 4, 1});
    CHECK(solvability_check(3).solvable);
    const auto c = solvability_check(5);
    CHECK(c.derived_orders.front() == 60);
    CHECK(c.derived_orders.back() == 60);
    CHECK_FALSE(c.solvable);
    CHECK_THROWS_AS(solvability_check(7), std::invalid_argument);
}
