#include "hcert/elliptic/reduction.hpp"

#include "hcert/exact/finite_field.hpp"

#include <stdexcept>

namespace hcert::elliptic {

ReductionInfo reduction_info(const CurveQ& e, std::uint64_t p)
{
    if (p < 5 || !exact::is_prime(p)) throw std::invalid_argument("restricted to p >= 5");
    if (p > (1u << 26)) throw std::invalid_argument("prime too large for point counting");
    ReductionInfo info;
    info.p = p;
    info.good = !mpz_divisible_ui_p(e.disc().get_mpz_t(), p);
    if (!info.good) return info;

    // chi(v) = 1 if v is a nonzero square, -1 if a non-square, 0 if v = 0.
    std::vector<signed char> chi(p, -1);
    chi[0] = 0;
    for (std::uint64_t y = 1; y < p; ++y) chi[y * y % p] = 1;
    const std::uint64_t a = mpz_fdiv_ui(e.a4().get_mpz_t(), p);
    const std::uint64_t b = mpz_fdiv_ui(e.a6().get_mpz_t(), p);
    long sum = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
        const std::uint64_t v = ((x * x % p) * x + a * x + b) % p;
        sum += chi[v];
    }
    info.a_p = -sum;
    info.supersingular = info.a_p == 0;
    return info;
}

std::vector<std::uint64_t> find_supersingular_primes(const CurveQ& e, std::uint64_t bound)
{
    if (bound < 5) throw std::invalid_argument("bound must be at least 5");
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 5; p <= bound; p = exact::next_prime(p + 1)) {
        if (reduction_info(e, p).supersingular) out.push_back(p);
    }
    return out;
}

}  // namespace hcert::elliptic
