#include "hcert/elliptic/tilde.hpp"

#include "hcert/exact/finite_field.hpp"

#include <set>
#include <stdexcept>

namespace hcert::elliptic {

namespace {

template <class F>
bool scan(const F& field, int n, int s, TildeWitness& w)
{
    std::set<exact::u64> seen;
    for (exact::u64 t = 1; t < field.order(); ++t) {
        exact::u64 c = 1;
        for (int i = 0; i < s; ++i) c = field.mul(c, t);
        if (!seen.insert(c).second) continue;
        ++w.tested;
        exact::fpoly::Coeffs poly(static_cast<std::size_t>(n) + 1, 0);
        poly[0] = c;
        poly[2] = field.neg(1);
        poly[static_cast<std::size_t>(n)] = 1;
        if (exact::fpoly::is_irreducible(field, poly)) {
            w.found = true;
            w.t0 = t;
            return true;
        }
    }
    return false;
}

}  // namespace

std::string TildeWitness::describe() const
{
    if (!found) return "no witness among " + std::to_string(tested) + " specializations";
    return "t0 = " + std::to_string(t0) + " in F_" + std::to_string(p) + "^" + std::to_string(field_degree);
}

TildeWitness tilde_irreducibility_witness(int n, int s, std::uint64_t p, unsigned max_field_deg)
{
    if (n < 5 || n % 2 == 0) throw std::invalid_argument("n must be odd and at least 5");
    if (s <= 0 || s % 2 != 0) throw std::invalid_argument("s must be positive and even");
    if (p < 3 || !exact::is_prime(p)) throw std::invalid_argument("p must be an odd prime");
    if (static_cast<std::uint64_t>(n) % p != 0) throw std::invalid_argument("p must divide n");

    TildeWitness w;
    w.n = n;
    w.s = s;
    w.p = p;
    std::uint64_t q = 1;
    for (unsigned k = 1; k <= max_field_deg; ++k) {
        q *= p;
        if (q >= (1u << 22)) break;
        w.field_degree = k;
        const bool hit = k == 1 ? scan(exact::PrimeField(p), n, s, w) : scan(exact::ExtensionField(p, k), n, s, w);
        if (hit) return w;
    }
    w.field_degree = 0;
    return w;
}

}  // namespace hcert::elliptic
