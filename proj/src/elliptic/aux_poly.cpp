#include "hcert/elliptic/aux_poly.hpp"

#include "hcert/elliptic/reduction.hpp"
#include "hcert/exact/mod_poly.hpp"
#include "hcert/exact/roots.hpp"

#include <stdexcept>

namespace hcert::elliptic {

std::string mode_name(AuxMode mode) { return mode == AuxMode::paper ? "paper" : "compact"; }

std::optional<AuxMode> parse_mode(std::string_view s)
{
    if (s == "paper") return AuxMode::paper;
    if (s == "compact") return AuxMode::compact;
    return std::nullopt;
}

BiPolynomial tilde_polynomial(int n, int s)
{
    BiPolynomial t = BiPolynomial::monomial(1, 0, static_cast<unsigned>(n));
    t -= BiPolynomial::monomial(1, 0, 2);
    t += BiPolynomial::monomial(1, static_cast<unsigned>(s), 0);
    return t;
}

AuxPolynomial build_aux_poly(const CurveQ& e, std::uint64_t p, AuxMode mode, long max_xmap_degree)
{
    if (!reduction_info(e, p).supersingular) throw std::invalid_argument("prime is not supersingular for the curve");
    const long m = mode == AuxMode::paper ? static_cast<long>(p * p) : static_cast<long>(p);
    if (m * m > max_xmap_degree)
        throw exact::ResourceError("x-map degree " + std::to_string(m * m) + " exceeds the limit " +
                                   std::to_string(max_xmap_degree));

    AuxPolynomial out;
    out.p = p;
    out.mode = mode;
    out.m = static_cast<int>(m);
    out.n = static_cast<int>(m * m + 2 * static_cast<long>(p));
    out.x = xmap(e, out.m);

    const auto am = exact::ModPolynomial::reduce(out.x.a, p);
    const auto bm = exact::ModPolynomial::reduce(out.x.b, p);
    if (am != exact::ModPolynomial::reduce(IntPolynomial::monomial(1, static_cast<std::size_t>(m * m)), p))
        throw std::logic_error("a is not congruent to X^(m^2) mod p");
    if (bm != exact::ModPolynomial::reduce(IntPolynomial::constant(1), p)) throw std::logic_error("b is not congruent to 1 mod p");

    const unsigned two_p = static_cast<unsigned>(2 * p);
    BiPolynomial x2 = BiPolynomial::monomial(1, 0, 2) - BiPolynomial::monomial(1, 2, 0);
    out.f = BiPolynomial::from_x(out.x.a) * BiPolynomial::monomial(1, 0, two_p) - x2 * BiPolynomial::from_x(out.x.b);

    if (out.n % 2 == 0 || out.n < 5 || out.n % static_cast<long>(p) != 0)
        throw std::logic_error("tilde hypotheses fail for n = " + std::to_string(out.n));
    if (out.f.degree_x() != out.n) throw std::logic_error("f has the wrong degree in X");
    if (!congruent_mod(out.f, tilde_polynomial(out.n, 2), mpz_class(static_cast<unsigned long>(p))))
        throw std::logic_error("f is not congruent to X^n - X^2 + T^2 mod p");
    return out;
}

}  // namespace hcert::elliptic
