#pragma once

#include "hcert/elliptic/certificate.hpp"
#include "hcert/elliptic/curve.hpp"
#include "hcert/galois/osada.hpp"
#include "hcert/galois/small_point.hpp"
#include "hcert/galois/sn_an.hpp"
#include "hcert/heights/height_value.hpp"
#include "hcert/heights/neron_tate.hpp"
#include "hcert/matgroups/lemmas.hpp"
#include "hcert/matgroups/psl2.hpp"

#include <json.hpp>

namespace hcert::cli {

using nlohmann::json;

// Integers are emitted as decimal strings throughout.
json to_json(const mpz_class& v);
json to_json(const mpq_class& v);
json to_json(const exact::IntPolynomial& p);
json to_json(const exact::BiPolynomial& p);
json to_json(const exact::ComplexBall& b);
json to_json(const heights::HeightValue& h);
json to_json(const heights::AlgebraicNumber& a);
json to_json(const heights::CompareConstant& c);
json to_json(const elliptic::CurveQ& e);
json to_json(const elliptic::RationalPoint& p);
json to_json(const galois::IrreducibilityCertificate& c);
json to_json(const galois::GaloisCertificate& c);
json to_json(const galois::GmSmallPoint& g);
json to_json(const galois::OsadaDiscCheck& c);
json to_json(const elliptic::SmallPointCertificate& c);
json to_json(const matgroups::UkReport& r);
json to_json(const matgroups::BoundHReport& r);
json to_json(const matgroups::CommutatorReport& r);
json to_json(const matgroups::ExponentFacts& f);
json to_json(const matgroups::SolvabilityReport& r);

}  // namespace hcert::cli
