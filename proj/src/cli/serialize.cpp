#include "hcert/cli/serialize.hpp"

namespace hcert::cli {

json to_json(const mpz_class& v) { return v.get_str(); }

json to_json(const mpq_class& v) { return v.get_str(); }

json to_json(const exact::IntPolynomial& p)
{
    json a = json::array();
    for (int i = 0; i <= p.degree(); ++i) a.push_back(p.coeff(static_cast<std::size_t>(i)).get_str());
    return a;
}

json to_json(const exact::BiPolynomial& p)
{
    json a = json::array();
    for (const auto& [k, c] : p.terms()) a.push_back(json::array({k.first, k.second, c.get_str()}));
    return a;
}

json to_json(const exact::ComplexBall& b)
{
    return {{"re", b.re().to_string(20)}, {"im", b.im().to_string(20)}, {"rad", b.rad().to_string(6, MPFR_RNDU)}};
}

json to_json(const heights::HeightValue& h) { return {{"mid", h.mid_string()}, {"err", h.err_string()}}; }

json to_json(const heights::AlgebraicNumber& a)
{
    return {{"min_poly", to_json(a.min_poly)},
            {"root", to_json(a.root)},
            {"degree", a.degree()},
            {"verified", a.verified()}};
}

json to_json(const heights::CompareConstant& c)
{
    return {{"c_e", to_json(c.c_e)},
            {"c", to_json(c.c)},
            {"upper_l1", to_json(c.upper_l1)},
            {"lower_l1", to_json(c.lower_l1)},
            {"elimination_d", to_json(c.elimination_d)},
            {"model", c.model}};
}

json to_json(const elliptic::CurveQ& e)
{
    return {{"a4", to_json(e.a4())}, {"a6", to_json(e.a6())}, {"disc", to_json(e.disc())}};
}

json to_json(const elliptic::RationalPoint& p)
{
    if (p.infinity) return {{"infinity", true}};
    return {{"infinity", false}, {"x", to_json(p.x)}, {"y", to_json(p.y)}};
}

namespace {

json samples_json(const std::vector<galois::CycleSample>& samples)
{
    json a = json::array();
    for (const auto& s : samples) a.push_back({{"prime", s.prime}, {"cycle_type", s.degrees}});
    return a;
}

}  // namespace

json to_json(const galois::IrreducibilityCertificate& c)
{
    json j = {{"kind", c.kind_name()}, {"irreducible", c.irreducible()}, {"primes_examined", c.samples.size()}};
    if (c.kind == galois::IrreducibilityCertificate::Kind::by_prime) j["prime"] = c.prime;
    if (c.kind == galois::IrreducibilityCertificate::Kind::by_degree_sieve) j["samples"] = samples_json(c.samples);
    if (!c.reducible_reason.empty()) j["reducible_reason"] = c.reducible_reason;
    if (!c.factor.is_zero()) j["factor"] = to_json(c.factor);
    return j;
}

json to_json(const galois::GaloisCertificate& c)
{
    json j = {{"poly", to_json(c.poly)},
              {"degree", c.poly.degree()},
              {"irreducibility", to_json(c.irreducibility)},
              {"group_evidence", samples_json(c.group_evidence)},
              {"verdict", c.verdict_name()},
              {"disc_method", c.disc_method},
              {"primitivity", c.primitivity},
              {"alternating", c.alternating}};
    j["disc_square"] = c.disc_square ? json(*c.disc_square) : json(nullptr);
    return j;
}

json to_json(const galois::GmSmallPoint& g)
{
    return {{"n", g.n},
            {"certificate", to_json(g.certificate)},
            {"alpha", to_json(g.alpha)},
            {"h", to_json(g.h)},
            {"bound", to_json(g.bound)},
            {"positive", g.positive},
            {"within_bound", g.within_bound}};
}

json to_json(const galois::OsadaDiscCheck& c)
{
    return {{"n", c.n}, {"disc", to_json(c.disc)}, {"expected_abs", to_json(c.expected_abs)}, {"ok", c.ok}};
}

json to_json(const elliptic::SmallPointCertificate& c)
{
    json verdicts = json::array();
    for (const auto& v : c.verdicts)
        verdicts.push_back({{"name", v.name}, {"status", v.status_name()}, {"detail", v.detail}});
    return {{"curve", to_json(c.curve)},
            {"p", c.p},
            {"mode", elliptic::mode_name(c.mode)},
            {"m", c.m},
            {"n", c.n},
            {"f", to_json(c.f)},
            {"zeta", c.zeta},
            {"g", to_json(c.g)},
            {"galois", to_json(c.galois)},
            {"alpha", to_json(c.alpha)},
            {"beta", "sqrt(alpha'^3 + a4 alpha' + a6), not computed"},
            {"h_alpha", c.irreducible() ? to_json(c.h_alpha) : json(nullptr)},
            {"c", to_json(c.c)},
            {"nt_bound", to_json(c.nt_bound)},
            {"bound", to_json(c.bound)},
            {"identity_holds", c.identity_holds},
            {"status", c.status},
            {"verdicts", verdicts}};
}

json to_json(const matgroups::UkReport& r)
{
    return {{"p", r.p},
            {"n", r.n},
            {"k", r.k},
            {"order", r.order},
            {"expected_order", to_json(r.expected_order)},
            {"normal", r.normal},
            {"onto", r.onto},
            {"kernel_matches", r.kernel_matches},
            {"kernel_method", r.kernel_method}};
}

json to_json(const matgroups::BoundHReport& r)
{
    return {{"order", r.order},
            {"exponent", r.exponent},
            {"ord_p_exponent", r.ord_p_exponent},
            {"middle", to_json(r.middle)},
            {"right", to_json(r.right)},
            {"strict_holds", r.strict_holds},
            {"weak_holds", r.weak_holds},
            {"slack", r.slack}};
}

json to_json(const matgroups::CommutatorReport& r)
{
    return {{"p", r.p},
            {"n", r.n},
            {"d", r.d},
            {"xs", r.xs},
            {"closed_form_holds", r.closed_form_holds},
            {"distinct", r.distinct},
            {"count_bound_holds", r.count_bound_holds}};
}

json to_json(const matgroups::ExponentFacts& f)
{
    return {{"p", f.p},
            {"n", f.n},
            {"unit_group_order", f.unit_group_order},
            {"unit_generator", f.unit_generator},
            {"unit_group_cyclic", f.unit_group_cyclic},
            {"two_power_element", f.two_power_element},
            {"det_onto", f.det_onto},
            {"required_divisor", f.required_divisor},
            {"witness", f.witness.to_string()},
            {"witness_has_order", f.witness_has_order}};
}

json to_json(const matgroups::SolvabilityReport& r)
{
    return {{"p", r.p}, {"derived_orders", r.derived_orders}, {"solvable", r.solvable}};
}

}  // namespace hcert::cli
