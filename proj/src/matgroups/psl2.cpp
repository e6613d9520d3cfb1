#include "hcert/matgroups/psl2.hpp"

#include <set>
#include <stdexcept>

namespace hcert::matgroups {

namespace {

Permutation compose(const Permutation& a, const Permutation& b)
{
    // (a * b)(i) = a(b(i))
    Permutation r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

Permutation invert(const Permutation& a)
{
    Permutation r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint8_t>(i);
    return r;
}

}  // namespace

std::vector<Permutation> permutation_closure(const std::vector<Permutation>& gens, std::size_t points)
{
    Permutation id(points);
    for (std::size_t i = 0; i < points; ++i) id[i] = static_cast<std::uint8_t>(i);
    std::set<Permutation> seen{id};
    std::vector<Permutation> elems{id};
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& g : gens) {
            Permutation x = compose(elems[i], g);
            if (seen.insert(x).second) elems.push_back(std::move(x));
        }
    return elems;
}

std::vector<Permutation> psl2_generators(std::uint32_t p)
{
    // Point i < p is [i : 1]; point p is [1 : 0].
    auto act = [p](long a, long b, long c, long d) {
        Permutation perm(p + 1);
        auto norm = [p](long v) { return static_cast<long>(((v % static_cast<long>(p)) + p) % p); };
        auto inv = [&](long v) {
            for (long w = 1; w < static_cast<long>(p); ++w)
                if (norm(v * w) == 1) return w;
            throw std::logic_error("no inverse");
        };
        for (std::uint32_t i = 0; i <= p; ++i) {
            long x = i == p ? 1 : static_cast<long>(i), z = i == p ? 0 : 1;
            long nx = norm(a * x + b * z), nz = norm(c * x + d * z);
            perm[i] = static_cast<std::uint8_t>(nz == 0 ? p : norm(nx * inv(nz)));
        }
        return perm;
    };
    return {act(1, 1, 0, 1), act(0, -1, 1, 0)};
}

SolvabilityReport solvability_check(std::uint32_t p)
{
    if (p != 2 && p != 3 && p != 5) throw std::invalid_argument("solvability check takes p in {2, 3} or the control p = 5");
    SolvabilityReport rep;
    rep.p = p;
    std::vector<Permutation> group = permutation_closure(psl2_generators(p), p + 1);
    rep.derived_orders.push_back(group.size());
    while (group.size() > 1) {
        std::set<Permutation> comms;
        for (const auto& a : group)
            for (const auto& b : group) comms.insert(compose(compose(a, b), compose(invert(a), invert(b))));
        std::vector<Permutation> next = permutation_closure({comms.begin(), comms.end()}, p + 1);
        if (next.size() == group.size()) break;
        group = std::move(next);
        rep.derived_orders.push_back(group.size());
    }
    rep.solvable = group.size() == 1;
    return rep;
}

}  // namespace hcert::matgroups
