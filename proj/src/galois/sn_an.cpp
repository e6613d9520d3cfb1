#include "hcert/galois/sn_an.hpp"

#include "hcert/exact/mod_poly.hpp"
#include "hcert/exact/resultant.hpp"

#include <map>
#include <stdexcept>

namespace hcert::galois {

using namespace exact;

namespace {

bool is_small_prime(int l) { return l >= 2 && is_prime(static_cast<u64>(l)); }

}  // namespace

std::string GaloisCertificate::verdict_name() const
{
    switch (verdict) {
    case Verdict::contains_An: return "contains_An";
    case Verdict::is_Sn: return "is_Sn";
    case Verdict::is_An: return "is_An";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

CycleTypeFacts analyze_cycle_type(int n, const std::vector<int>& degrees)
{
    CycleTypeFacts f;
    f.odd = (n - static_cast<int>(degrees.size())) % 2 != 0;
    std::map<int, int> count;
    for (int d : degrees) ++count[d];
    auto extractable = [&](int l) {
        auto it = count.find(l);
        if (it == count.end() || it->second != 1) return false;
        for (const auto& [len, c] : count)
            if (len != l && len % l == 0) return false;
        return true;
    };
    f.transposition = extractable(2);
    f.three_cycle = extractable(3);
    for (const auto& [len, c] : count)
        if (is_small_prime(len) && extractable(len)) f.prime_cycles.push_back(len);
    f.long_cycle_with_fixed_point = n >= 3 && degrees.size() == 2 && degrees[0] == 1 && degrees[1] == n - 1;
    return f;
}

GaloisCertificate sn_an_certify(const IntPolynomial& p_in, const GaloisOptions& opts)
{
    GaloisCertificate cert;
    cert.poly = p_in.primitive_part();
    const IntPolynomial& p = cert.poly;
    const int n = p.degree();
    if (n < 2) throw std::invalid_argument("Galois certification needs degree >= 2");
    cert.irreducibility = certify_irreducible(p, opts.prime_budget);
    if (!cert.irreducibility.irreducible()) return cert;

    bool primitive = false, contains_an = false;
    if (is_prime(static_cast<u64>(n))) {
        primitive = true;
        cert.primitivity = "prime degree";
    }
    if (n <= 3) {
        contains_an = true;
        cert.alternating = "transitive of degree " + std::to_string(n);
    }
    // Candidates for Jordan's theorem seen before primitivity was known.
    std::string pending;
    std::optional<u64> odd_at;

    auto consume = [&](const CycleSample& s) {
        const CycleTypeFacts f = analyze_cycle_type(n, s.degrees);
        const std::string at = " at " + std::to_string(s.prime);
        if (f.odd && !odd_at) odd_at = s.prime;
        if (!primitive) {
            if (f.long_cycle_with_fixed_point) {
                primitive = true;
                cert.primitivity = std::to_string(n - 1) + "-cycle" + at;
            }
            for (int l : f.prime_cycles)
                if (2 * l > n && !primitive) {
                    primitive = true;
                    cert.primitivity = std::to_string(l) + "-cycle" + at;
                }
        }
        if (pending.empty()) {
            if (f.transposition) pending = "transposition" + at;
            else if (f.three_cycle) pending = "3-cycle" + at;
            else
                for (int l : f.prime_cycles)
                    if (l <= n - 3) {
                        pending = std::to_string(l) + "-cycle" + at;
                        break;
                    }
        }
        if (primitive && !contains_an && !pending.empty()) {
            contains_an = true;
            cert.alternating = pending;
        }
    };

    int used = 0;
    u64 last = 1;
    for (const auto& s : cert.irreducibility.samples) {
        cert.group_evidence.push_back(s);
        consume(s);
        last = s.prime;
        ++used;
    }
    const bool exact_disc = n <= opts.exact_disc_max_degree;
    auto settled = [&] { return contains_an && (exact_disc || odd_at); };
    for (u64 q = next_prime(last + 1); used < opts.prime_budget && !settled(); q = next_prime(q + 1)) {
        if (mpz_divisible_ui_p(p.leading().get_mpz_t(), q)) continue;
        ModPolynomial r = ModPolynomial::reduce(p, q);
        if (!r.is_squarefree()) continue;
        ++used;
        CycleSample s{q, factor_degrees_mod_p(r)};
        cert.group_evidence.push_back(s);
        consume(s);
    }

    if (exact_disc) {
        const bool square = is_perfect_square(discriminant(p));
        if (square && odd_at) throw std::logic_error("square discriminant with an odd Frobenius element");
        cert.disc_square = square;
        cert.disc_method = "exact";
    } else if (odd_at) {
        cert.disc_square = false;
        cert.disc_method = "odd Frobenius at " + std::to_string(*odd_at);
    }

    if (!contains_an) return cert;
    if (!cert.disc_square) cert.verdict = GaloisCertificate::Verdict::contains_An;
    else cert.verdict = *cert.disc_square ? GaloisCertificate::Verdict::is_An : GaloisCertificate::Verdict::is_Sn;
    return cert;
}

}  // namespace hcert::galois
